#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypmass/collar_field.hpp"
#include "hypmass/collar_modes.hpp"
#include "hypmass/cusp_mass.hpp"

namespace hypmass {

/// One surface of a pinching sequence: the length of the pinched geodesic, the
/// eigenvalue and (optionally) Fourier data of a synthesized field on its collar.
struct PinchMember {
  double l_gamma = 0.0;
  double lambda = 0.0;
  std::vector<FieldCoefficients> coefficients;
};

struct PinchFamily {
  std::vector<PinchMember> members;

  [[nodiscard]] static PinchFamily from_schedule(const std::vector<double>& l_gammas,
                                                 const std::vector<double>& lambdas);
  /// l_gamma strictly decreasing and positive, lambda in (0, 1/4].
  void validate() const;
};

struct SweepRow {
  double l_gamma = 0.0;
  double r = 0.0;
  double value = 0.0;
  double limit = 0.0;
  double error = 0.0;
};

struct SweepTable {
  std::vector<SweepRow> rows;

  /// At every fixed r the error decreases along the schedule (ties only at zero).
  [[nodiscard]] bool decreasing_along_schedule() const;
};

/// |l cosh(r - rho) - e^{-r}/pi| in the shifted coordinate r (0 on the Keen
/// boundary, rho at the core geodesic). Requires r <= rho for every member.
[[nodiscard]] SweepTable metric_convergence_sweep(const PinchFamily& family,
                                                  const std::vector<double>& r_grid);

/// j^2 / (l^2 cosh^2(r - rho)), the mode potential in the shifted coordinate.
[[nodiscard]] double shifted_potential(double l_gamma, int j, double r_shifted);
/// j^2 pi^2 e^{2 r}, its limit on the paired cusps.
[[nodiscard]] double limit_potential(int j, double r_shifted);

/// Relative error of the shifted potential against its limit (0 when j = 0).
[[nodiscard]] SweepTable potential_convergence_sweep(const PinchFamily& family, int j,
                                                     const std::vector<double>& r_grid);

struct DichotomyMember {
  double l_gamma = 0.0;
  double lambda = 0.0;
  /// Squared thick-part mass ||phi_m||^2 on S^{[eps, inf)}, one per grid eps.
  std::vector<double> thick_mass_sq;
};

struct DichotomyInput {
  std::vector<double> eps_grid;
  std::vector<DichotomyMember> members;
};

struct DichotomyOptions {
  /// Fraction of the schedule that stands in for the limsup.
  double tail_fraction = 0.25;
  /// Case 1 threshold on the squared thick mass.
  double delta = 1e-3;
  /// Bound K_m must exceed to count as diverging; defaults to delta^{-1/2}.
  std::optional<double> divergence_bound;
};

enum class DichotomyCase { case1, case2 };

[[nodiscard]] const char* to_string(DichotomyCase c) noexcept;

struct DichotomyReport {
  DichotomyCase kind = DichotomyCase::case2;
  /// Max squared thick mass over the schedule tail, per grid eps.
  std::vector<double> tail_max;
  std::optional<double> witness_eps;
  std::optional<double> witness_delta;
  /// K_m = (thick mass at the smallest eps)^{-1}; renormalized thick mass is 1.
  std::vector<double> renormalizers;
  bool renormalizers_nondecreasing = false;
  bool renormalizers_diverging = false;
  double divergence_bound = 0.0;
};

/// Case 1 when some eps has tail max of the squared thick mass >= delta,
/// otherwise Case 2 with the renormalizing constants K_m.
[[nodiscard]] DichotomyReport classify_dichotomy(const DichotomyInput& input,
                                                 const DichotomyOptions& options = {});

struct CollarFamilyOptions {
  ModeKind kind = ModeKind::c;
  SolveOptions solve{};
};

/// Thick fraction mass[eps, 1] / mass[l_gamma, 1] of the j = 0 generator on
/// each member's collar, for every eps of the grid.
[[nodiscard]] DichotomyInput synthesize_collar_family(const PinchFamily& family,
                                                      const std::vector<double>& eps_grid,
                                                      const CollarFamilyOptions& options = {});

enum class RegionKind { cusp, collar };

/// Thin-part region of a surface and the constant C with
/// ||f||_{thin part of region} <= C ||f||_{band of region in the thick part}.
struct RegionBound {
  std::string name;
  RegionKind kind = RegionKind::cusp;
  std::optional<double> constant;
};

struct SurfaceModel {
  std::vector<RegionBound> regions;
  std::optional<double> thick_mass_sq;
};

struct AggregateReport {
  double eps = 0.0;
  double combined_constant = 0.0;
  std::string dominant_region;
  /// Lower bound 1 / (1 + C^2)^{1/2} on the thick mass of a unit-mass function.
  double thick_mass_lower_bound = 1.0;
  /// C^2 times the supplied thick mass, when one was given.
  std::optional<double> thin_mass_sq_bound;
};

[[nodiscard]] AggregateReport aggregate_mass_bounds(const SurfaceModel& model, double eps);

/// Region constant from a cusp sweep (the measured ratio at `eps`).
[[nodiscard]] RegionBound cusp_region(std::string name, const cusp::CuspBoundReport& report,
                                      double eps);
/// Region constant max(T_0, T_1) from a collar lemma report; absent without eta.
[[nodiscard]] RegionBound collar_region(std::string name, const CollarLemmaReport& report);

}  // namespace hypmass
