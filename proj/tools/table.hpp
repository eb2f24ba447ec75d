#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace qbertrand::cli {

/// Empty cells become "" in CSV and null in JSON.
using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// 17 significant digits, "." decimal separator; round-trips exactly.
std::string format_double(double v);

/// RFC 4180 style with '\n' line endings and a header row.
void write_csv(const Table& table, std::ostream& out);

/// Array of objects keyed by the header.
nlohmann::ordered_json to_json(const Table& table);

}  // namespace qbertrand::cli
