#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "gaplab/error.hpp"

namespace gaplab::detail {

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream stream(line);
  std::string field;
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

inline double parse_number(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == text.size() && !text.empty(), ErrorKind::io,
          fmt::format("CSV: cannot parse number '{}'", text));
  return value;
}

inline std::vector<std::vector<std::string>> read_csv_rows(std::istream& in, std::string_view header) {
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), ErrorKind::io, "CSV: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  require(line == header, ErrorKind::io,
          fmt::format("CSV: expected header '{}', got '{}'", header, line));
  const std::size_t width = split_csv(line).size();
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_csv(line);
    require(fields.size() == width, ErrorKind::io, fmt::format("CSV: malformed row '{}'", line));
    rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace gaplab::detail
