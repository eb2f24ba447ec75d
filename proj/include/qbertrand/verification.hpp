#pragma once

// The verification suite shared by the CLI `verify` command and the acceptance
// test binary. Every check is deterministic for a given seed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qbertrand {

struct CheckResult {
  std::string group;
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  /// Reported for context only; never affects the overall verdict.
  bool informational = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  /// Group names to run; empty runs all of them.
  std::vector<std::string> only;
};

/// Group names in execution order: coulomb, oscillator, couplings, bertrand,
/// duality, eigenfunctions, pct, second-class.
const std::vector<std::string>& verification_groups();

/// Throws Error(invalid_parameter) for an unknown group in `only`.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

/// True when every non-informational check passed.
bool all_passed(const std::vector<CheckResult>& results) noexcept;

/// Uniform doubles in [0, 1) from the top 53 bits of mt19937_64. The standard
/// distributions are implementation-defined; this keeps draws portable.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed);
  double next();
  double uniform(double lo, double hi) { return lo + (hi - lo) * next(); }
  int integer(int lo, int hi);  ///< inclusive

 private:
  std::mt19937_64 engine_;
};

}  // namespace qbertrand
