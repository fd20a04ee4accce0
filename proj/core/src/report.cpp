#include "hypmass/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "hypmass/error.hpp"

namespace hypmass::report {

std::string full(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

std::string human(double v) {
  if (!std::isfinite(v)) return full(v);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

CsvTable::CsvTable(std::string schema, std::vector<std::string> columns)
    : schema_(std::move(schema)), columns_(std::move(columns)) {}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != columns_.size()) throw Error("CSV table: row width does not match the header");
  rows_.push_back(std::move(row));
}

void CsvTable::write(std::ostream& out) const {
  out << "#schema=" << schema_ << '\n';
  const auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_escape(cells[i]);
    out << '\n';
  };
  line(columns_);
  for (const auto& row : rows_) line(row);
}

void CsvTable::write_human(std::ostream& out) const {
  const auto shorten = [](const std::string& cell) {
    double v = 0.0;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec == std::errc() && res.ptr == cell.data() + cell.size()) return human(v);
    return cell;
  };
  std::vector<std::vector<std::string>> cells;
  cells.push_back(columns_);
  for (const auto& row : rows_) {
    std::vector<std::string> r;
    for (const auto& c : row) r.push_back(shorten(c));
    cells.push_back(std::move(r));
  }
  std::vector<std::size_t> width(columns_.size(), 0);
  for (const auto& r : cells)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  for (const auto& r : cells) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out << r[i];
      if (i + 1 < r.size()) out << std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << '\n';
  }
}

}  // namespace hypmass::report
