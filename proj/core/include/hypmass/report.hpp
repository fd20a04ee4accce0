#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hypmass::report {

/// Shortest round-trip decimal form of v ("inf", "-inf", "nan" for non-finite values).
[[nodiscard]] std::string full(double v);
/// Six significant digits, for human-readable output.
[[nodiscard]] std::string human(double v);
/// RFC-4180 field quoting: fields containing a comma, quote or newline are quoted.
[[nodiscard]] std::string csv_escape(std::string_view field);

/// CSV table with a leading "#schema=<name>" line followed by the header row.
class CsvTable {
 public:
  CsvTable(std::string schema, std::vector<std::string> columns);

  void add_row(std::vector<std::string> row);
  [[nodiscard]] const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }
  [[nodiscard]] const std::vector<std::string>& columns() const noexcept { return columns_; }
  [[nodiscard]] const std::string& schema() const noexcept { return schema_; }

  void write(std::ostream& out) const;
  /// Aligned columns with numbers reduced to six significant digits.
  void write_human(std::ostream& out) const;

 private:
  std::string schema_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace hypmass::report
