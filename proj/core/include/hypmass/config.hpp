#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypmass/degeneration.hpp"
#include "hypmass/tolerance.hpp"

namespace hypmass {

enum class OutputFormat { csv, json, human };

[[nodiscard]] const char* to_string(OutputFormat f) noexcept;
[[nodiscard]] OutputFormat parse_format(std::string_view name);

/// Parameters of a cli run. Defaults reproduce the standard verification grids.
///
/// Config files are plain `key = value` lines; `#` starts a comment, lists are
/// comma separated, and each `[member]` block adds one member to the pinching
/// family (keys lgamma, lambda and repeatable `mode = j a b a' b'`).
struct RunConfig {
  std::string command;
  OutputFormat format = OutputFormat::human;
  std::string out_dir = "hypmass_reports";
  std::optional<std::string> out_file;

  std::string profile = "default";
  Tolerances tol{};

  // collar
  double lambda = 0.16;
  double l_gamma = 0.01;
  double eps = 0.1;
  std::optional<double> eta = 0.09;
  std::optional<double> eps0;
  int j_max = 4;
  int grid_points = 2048;
  int theta_points = 256;
  std::vector<double> constants_eps{0.3, 0.1, 0.03, 0.01};

  // specfun grid
  std::vector<double> k_eps{0.0, 0.1, 0.25, 0.5};
  std::optional<double> k_y_min;
  double k_y_max = 50.0;
  int k_y_points = 200;

  // cusp
  std::vector<double> cusp_b;
  int cusp_n_max = 8;
  std::vector<double> cusp_s{0.5, 0.625, 0.75, 0.875, 1.0};
  std::vector<double> residual_s{0.05, 0.15, 0.3, 0.45};

  // tail
  std::vector<double> tail_l_gamma{1e-2, 1e-3, 1e-4};
  std::vector<double> tail_eps{0.25, 0.1, 0.04};
  double tail_t = 1.0;
  int tail_j_max = 3;

  // nodal
  std::optional<std::string> nodal_input;

  // degeneration
  std::vector<double> schedule{1e-1, 1e-2, 1e-3};
  std::vector<double> r_shifted{-2.0, -1.0, 0.0};
  int potential_j = 1;
  std::vector<double> dichotomy_eps{0.5, 0.2, 0.1};
  double dichotomy_delta = 1e-3;
  double tail_fraction = 0.25;
  std::vector<PinchMember> members;

  /// Tolerances > 0, grids non-empty, format and profile known.
  void validate() const;
};

/// Comma separated doubles; blank entries are rejected. Throws ConfigError.
[[nodiscard]] std::vector<double> parse_double_list(std::string_view text);
[[nodiscard]] double parse_double(std::string_view text);
[[nodiscard]] int parse_int(std::string_view text);

/// Applies a config stream on top of `base`. Unknown keys throw ConfigError.
/// HYPMASS_TOLERANCE_PROFILE, when set, replaces the profile name.
[[nodiscard]] RunConfig parse_run_config(std::istream& in, RunConfig base = {});
[[nodiscard]] RunConfig load_run_config(const std::string& path, RunConfig base = {});

/// Sets one key on the config, as a config-file line would.
void apply_config_key(RunConfig& config, std::string_view key, std::string_view value);

/// Recomputes `tol` from the profile name (environment override applied).
void resolve_tolerances(RunConfig& config);

}  // namespace hypmass
