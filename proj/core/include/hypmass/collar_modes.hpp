#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypmass/geometry.hpp"
#include "hypmass/mass.hpp"
#include "hypmass/specfun.hpp"
#include "hypmass/tolerance.hpp"

namespace hypmass {

/// Fourier-mode equation on the collar:
/// phi'' + tanh(r) phi' + (lambda - j^2 / (l^2 cosh^2 r)) phi = 0.
struct ModeODE {
  CollarGeometry geom{0.01};
  SpectralParam param = SpectralParam::from_lambda(0.0);
  int j = 0;

  /// j^2 / (l^2 cosh^2 r).
  [[nodiscard]] double potential(double r) const;
  /// (1/4 - lambda) + 1/(4 cosh^2 r) + j^2/(l^2 cosh^2 r), the coefficient of u = cosh^{1/2} phi.
  [[nodiscard]] double transformed_coeff(double r) const;
  void validate() const;
};

/// s: odd solution, phi(0) = 0, phi'(0) = 1. c: even solution, phi(0) = 1, phi'(0) = 0.
/// The same initial data hold for u = cosh^{1/2} phi.
enum class ModeKind { s, c };

[[nodiscard]] const char* to_string(ModeKind kind) noexcept;

/// Solution state at r. The true values are phi * e^{log_scale},
/// dphi * e^{log_scale} and mass * e^{2 log_scale}, where
/// mass(r) = int_0^r cosh(x) phi(x)^2 dx (negative for r < 0).
struct ModeState {
  double r = 0.0;
  double phi = 0.0;
  double dphi = 0.0;
  double mass = 0.0;
  double log_scale = 0.0;
};

struct SolveOptions {
  /// Uniform symmetric grid on [-L_1, L_1].
  int grid_points = 2048;
  Tolerances tol{};
};

class ModeSolution {
 public:
  ModeSolution(ModeODE ode, ModeKind kind, std::vector<ModeState> samples, SolveOptions options);

  [[nodiscard]] const ModeODE& ode() const noexcept { return ode_; }
  [[nodiscard]] ModeKind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::vector<ModeState>& samples() const noexcept { return samples_; }
  [[nodiscard]] ModeState origin() const noexcept;
  [[nodiscard]] double half_width() const noexcept { return half_width_; }

  /// State at an arbitrary |r| <= L_1, integrated outward from the nearest
  /// stored sample closer to 0.
  [[nodiscard]] ModeState state_at(double r) const;
  /// States at several points on one side of 0, from a single outward
  /// trajectory, all expressed on the log scale of the first point.
  [[nodiscard]] std::vector<ModeState> trajectory(std::vector<double> points) const;

  /// Relative residual of the mode equation at each grid point, with phi''
  /// from a fourth-order central difference of phi'.
  [[nodiscard]] std::vector<double> residuals() const;
  [[nodiscard]] double max_residual() const;
  /// Relative residual of u'' = Q u at each grid point, u'' by a second
  /// central difference of u = cosh^{1/2} phi.
  [[nodiscard]] std::vector<double> transform_residuals() const;
  /// max_r |phi(r) -+ phi(-r)| / max(|phi(r)|, |phi(-r)|) over mirrored grid points.
  [[nodiscard]] double parity_defect() const;
  /// True phi at grid point i (may overflow for huge solutions).
  [[nodiscard]] double value(std::size_t i) const;

 private:
  ModeODE ode_;
  ModeKind kind_;
  std::vector<ModeState> samples_;
  SolveOptions options_;
  double half_width_;
};

/// Integrates the mode equation from r = 0 outward in both directions.
/// Throws IntegrationError (with the failing r) on step-size collapse.
[[nodiscard]] ModeSolution solve_mode(const ModeODE& ode, ModeKind kind,
                                      const SolveOptions& options = {});

/// Sample of u with first and second derivatives; true values carry e^{log_scale}.
struct USample {
  double r = 0.0;
  double value = 0.0;
  double deriv = 0.0;
  double second = 0.0;
  double log_scale = 0.0;
};

/// u = cosh^{1/2}(r) phi on the grid plus r = 0, ascending in r.
[[nodiscard]] std::vector<USample> transform_u(const ModeSolution& sol);

enum class MonotoneVerdict { increasing, not_increasing, hypothesis_not_satisfied, precondition_failed };

[[nodiscard]] const char* to_string(MonotoneVerdict verdict) noexcept;

struct RatioSample {
  double r = 0.0;
  double log_abs = 0.0;  ///< log |u / cosh(delta r)|
  int sign = 0;

  [[nodiscard]] double value() const;
};

struct MonotoneReport {
  MonotoneVerdict verdict = MonotoneVerdict::precondition_failed;
  std::vector<RatioSample> ratio;
  std::optional<double> first_failure_r;
};

/// Checks u'' > delta^2 u on the samples with r > 0 and, if it holds, that
/// u / cosh(delta r) is strictly increasing on r >= 0. Requires a sample at
/// r = 0 with u'(0) >= 0.
[[nodiscard]] MonotoneReport monotone_ratio_check(const std::vector<USample>& samples, double delta);

/// T(delta)^2 = (sinh(2 delta L_eps) + 2 delta L_eps) /
///              (sinh(2 delta L_1) - sinh(2 delta L_eps) + 2 delta (L_1 - L_eps)).
[[nodiscard]] double collar_ratio_constant(const CollarGeometry& geom, double eps, double delta);
/// T_0(eps, eta) with delta_0 = sqrt(eta).
[[nodiscard]] double t0_constant(const CollarGeometry& geom, double eps, double eta);
/// T_1(eps) with delta = 1.
[[nodiscard]] double t1_constant(const CollarGeometry& geom, double eps);
/// T_2(eps)^2 = (L_{eps0} - L_eps) / (L_1 - L_{eps0}).
[[nodiscard]] double t2_constant(const CollarGeometry& geom, double eps, double eps0);

/// l_gamma * int u^2 dr over both sides of the band t <= l_gamma cosh r <= w.
[[nodiscard]] MassProfile mode_mass(const ModeSolution& sol, double t, double w);

struct CollarLemmaRow {
  int j = 0;
  ModeKind kind = ModeKind::s;
  std::string inequality;
  double measured = 0.0;
  double constant = 0.0;

  [[nodiscard]] bool pass() const noexcept { return measured <= constant; }
};

struct CollarLemmaOptions {
  /// Outer threshold eps_0; defaults to the geometry's Margulis constant.
  std::optional<double> eps0;
  SolveOptions solve{};
};

struct CollarLemmaReport {
  double l_gamma = 0.0;
  double lambda = 0.0;
  double eps = 0.0;
  double eps0 = 0.0;
  std::optional<double> eta;
  double t1 = 0.0;
  double t1_outer = 0.0;  ///< T_1(eps0)
  double t2 = 0.0;
  std::optional<double> t0;
  std::vector<CollarLemmaRow> rows;

  [[nodiscard]] bool pass() const noexcept;
};

/// Measures the collar mass ratios of the generators s_j, c_j (j <= j_max)
/// against the constants T_0, T_1, T_2.
[[nodiscard]] CollarLemmaReport verify_collar_lemma(const CollarGeometry& geom,
                                                    const SpectralParam& param, int j_max,
                                                    double eps, std::optional<double> eta = {},
                                                    const CollarLemmaOptions& options = {});

/// log cosh(x) without overflow.
[[nodiscard]] double log_cosh(double x) noexcept;

}  // namespace hypmass
