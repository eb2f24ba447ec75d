#pragma once

// Key/value run configuration: `key = value` lines from a file, overridden by
// `key=value` arguments on the command line.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qbertrand::cli {

/// Any malformed or unknown entry. Maps onto exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class KeyValues {
 public:
  /// Reads `key = value` lines; blank lines and lines starting with '#' are skipped.
  void load_file(const std::string& path);
  /// Parses one `key=value` argument; later entries replace earlier ones.
  void set_entry(const std::string& entry);
  void set(const std::string& key, const std::string& value);

  /// Throws ConfigError naming the first key outside `known`.
  void require_known(const std::set<std::string>& known) const;

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::string text(const std::string& key, const std::string& fallback) const;
  /// Finite decimal; throws ConfigError naming the key otherwise.
  double number(const std::string& key, double fallback) const;
  std::optional<double> number(const std::string& key) const;
  int integer(const std::string& key, int fallback) const;
  bool flag(const std::string& key, bool fallback) const;
  /// Comma-separated finite decimals, optionally wrapped in [ ].
  std::vector<double> numbers(const std::string& key, std::vector<double> fallback) const;
  /// `[r_min, r_max, n_points]`.
  std::array<double, 3> grid(const std::string& key, std::array<double, 3> fallback) const;
  std::string choice(const std::string& key, const std::string& fallback,
                     const std::set<std::string>& allowed) const;

 private:
  std::map<std::string, std::string> values_;
};

/// Strict finite decimal parse of the whole string.
std::optional<double> parse_number(const std::string& text);

}  // namespace qbertrand::cli
