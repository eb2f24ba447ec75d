#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace qbertrand::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::optional<double> parse_number(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) return std::nullopt;
  const char* begin = t.data();
  if (*begin == '+') ++begin;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(value))
    return std::nullopt;
  return value;
}

void KeyValues::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(number) + ": expected 'key = value'");
    set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
}

void KeyValues::set_entry(const std::string& entry) {
  const auto eq = entry.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("expected key=value, got '" + entry + "'");
  set(trim(entry.substr(0, eq)), trim(entry.substr(eq + 1)));
}

void KeyValues::set(const std::string& key, const std::string& value) {
  if (key.empty()) throw ConfigError("empty key");
  values_[key] = value;
}

void KeyValues::require_known(const std::set<std::string>& known) const {
  for (const auto& [key, value] : values_)
    if (!known.count(key)) throw ConfigError("unknown key '" + key + "'");
}

std::string KeyValues::text(const std::string& key, const std::string& fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

std::optional<double> KeyValues::number(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  const auto v = parse_number(it->second);
  if (!v) throw ConfigError("key '" + key + "': '" + it->second + "' is not a finite number");
  return v;
}

double KeyValues::number(const std::string& key, double fallback) const {
  return number(key).value_or(fallback);
}

int KeyValues::integer(const std::string& key, int fallback) const {
  const auto v = number(key);
  if (!v) return fallback;
  if (*v != std::floor(*v) || std::abs(*v) > 1e9)
    throw ConfigError("key '" + key + "': '" + text(key, "") + "' is not an integer");
  return static_cast<int>(*v);
}

bool KeyValues::flag(const std::string& key, bool fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (it->second == "true" || it->second == "1") return true;
  if (it->second == "false" || it->second == "0") return false;
  throw ConfigError("key '" + key + "': expected true or false, got '" + it->second + "'");
}

std::vector<double> KeyValues::numbers(const std::string& key,
                                       std::vector<double> fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  std::string body = trim(it->second);
  if (!body.empty() && body.front() == '[' && body.back() == ']')
    body = body.substr(1, body.size() - 2);
  std::vector<double> out;
  for (const auto& part : split(body, ',')) {
    const auto v = parse_number(part);
    if (!v) throw ConfigError("key '" + key + "': '" + part + "' is not a finite number");
    out.push_back(*v);
  }
  return out;
}

std::array<double, 3> KeyValues::grid(const std::string& key,
                                      std::array<double, 3> fallback) const {
  if (!has(key)) return fallback;
  const auto v = numbers(key, {});
  if (v.size() != 3 || v[2] != std::floor(v[2]) || v[2] < 2 || !(v[0] < v[1]))
    throw ConfigError("key '" + key + "': expected [r_min, r_max, n_points] with r_min < r_max");
  return {v[0], v[1], v[2]};
}

std::string KeyValues::choice(const std::string& key, const std::string& fallback,
                              const std::set<std::string>& allowed) const {
  const std::string v = text(key, fallback);
  if (!allowed.count(v)) throw ConfigError("key '" + key + "': unsupported value '" + v + "'");
  return v;
}

}  // namespace qbertrand::cli
