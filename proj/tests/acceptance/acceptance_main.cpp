// One line per acceptance criterion. Tolerances live in the verification
// suite; the runtime ceilings below apply to the whole group.

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qbertrand/verification.hpp"

using qbertrand::CheckResult;

namespace {

struct Criterion {
  int id;
  const char* title;
  const char* group;
  double max_seconds;  // 0 means no limit
};

constexpr std::uint64_t seed = 42;

const Criterion criteria[] = {
    {1, "Coulomb spectrum vs fd_spectrum", "coulomb", 30.0},
    {2, "Oscillator spectrum vs fd_spectrum and numerov_eigen", "oscillator", 20.0},
    {3, "Coupling identities for both parametrisations", "couplings", 0.0},
    {4, "Constant independence only at alpha = 1, 2", "bertrand", 0.0},
    {5, "Series termination and Laguerre duality", "duality", 0.0},
    {6, "Analytic eigenfunction residuals", "eigenfunctions", 0.0},
    {7, "PCT suite", "pct", 0.0},
    {8, "Second-class suite", "second-class", 0.0},
};

std::string serialise(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : results)
    doc.push_back({{"group", r.group},
                   {"name", r.name},
                   {"pass", r.pass},
                   {"measured", r.measured},
                   {"tolerance", r.tolerance},
                   {"informational", r.informational},
                   {"detail", r.detail}});
  return doc.dump();
}

}  // namespace

int main() {
  int passed = 0;
  const int total = static_cast<int>(std::size(criteria)) + 1;

  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    std::string failure;
    try {
      results = qbertrand::run_verification({seed, {c.group}});
    } catch (const std::exception& e) {
      failure = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool ok = failure.empty() && !results.empty() && qbertrand::all_passed(results);
    if (c.max_seconds > 0.0 && seconds >= c.max_seconds) {
      ok = false;
      failure = "runtime limit exceeded";
    }
    // Report the check closest to its tolerance.
    std::string worst;
    double margin = -1.0;
    for (const auto& r : results) {
      if (r.informational) continue;
      if (!r.pass && failure.empty()) failure = r.name + ": " + r.detail;
      const double m = r.tolerance > 0.0 ? r.measured / r.tolerance : (r.measured > 0.0 ? 1e300 : 0.0);
      if (m > margin) {
        margin = m;
        char buf[512];
        std::snprintf(buf, sizeof buf, "%s = %.3g (tol %.3g)", r.name.c_str(), r.measured, r.tolerance);
        worst = buf;
      }
    }
    std::printf("[%s] criterion %d: %s | %zu checks, %.2f s | %s%s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.title, results.size(), seconds, worst.c_str(), failure.empty() ? "" : " | ",
                failure.c_str());
    if (ok) ++passed;
  }

  const auto start = std::chrono::steady_clock::now();
  const std::string first = serialise(qbertrand::run_verification({seed, {}}));
  const std::string second = serialise(qbertrand::run_verification({seed, {}}));
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool same = first == second;
  std::printf("[%s] criterion 9: Determinism of the seed-%llu report | %zu bytes, %.2f s\n",
              same ? "PASS" : "FAIL", static_cast<unsigned long long>(seed), first.size(), seconds);
  if (same) ++passed;

  std::printf("%d/%d criteria passed\n", passed, total);
  return passed == total ? 0 : 1;
}
