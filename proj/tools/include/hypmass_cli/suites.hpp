#pragma once

#include <string>
#include <vector>

#include "hypmass/config.hpp"
#include "hypmass/report.hpp"

namespace hypmass::cli {

struct NamedTable {
  std::string name;
  report::CsvTable table;
};

/// Outcome of one verification suite: report tables plus one line per
/// violated inequality.
struct SuiteResult {
  std::string suite;
  std::vector<NamedTable> tables;
  std::vector<std::string> notes;
  std::vector<std::string> failures;

  [[nodiscard]] bool pass() const noexcept { return failures.empty(); }
};

inline const std::vector<std::string> kSuites{"cusp", "collar", "tail", "nodal"};

[[nodiscard]] SuiteResult run_cusp(const RunConfig& config);
[[nodiscard]] SuiteResult run_collar(const RunConfig& config);
[[nodiscard]] SuiteResult run_tail(const RunConfig& config);
[[nodiscard]] SuiteResult run_nodal(const RunConfig& config);
[[nodiscard]] SuiteResult run_suite(const std::string& name, const RunConfig& config);

/// Columns: l_gamma, r_shifted, metric_value, metric_limit, metric_error,
/// potential_value, potential_limit, potential_rel_error.
[[nodiscard]] report::CsvTable sweep_degeneration(const RunConfig& config);
/// Columns: l_gamma, eps, eta, eps0, t0, t1, t2.
[[nodiscard]] report::CsvTable sweep_constants(const RunConfig& config);
/// Columns: b, n, s, log_ratio, ratio.
[[nodiscard]] report::CsvTable sweep_tail_ratio(const RunConfig& config);

/// JSON document {suite, pass, notes, failures, tables}.
[[nodiscard]] std::string to_json(const SuiteResult& result);
[[nodiscard]] std::string to_json(const report::CsvTable& table);

}  // namespace hypmass::cli
