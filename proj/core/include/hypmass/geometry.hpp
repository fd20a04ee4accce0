#pragma once

#include <numbers>

#include "hypmass/tolerance.hpp"

namespace hypmass {

/// Default Margulis constant used for thin-part boundaries.
inline constexpr double kDefaultMargulis = 0.5;

/// Numerically stable inverse hyperbolic cosine for x >= 1.
[[nodiscard]] double arccosh(double x);
/// Numerically stable inverse hyperbolic sine.
[[nodiscard]] double arcsinh(double x);

/// Hyperbolic collar around a closed geodesic of length l_gamma.
///
/// In Fermi coordinates (r, theta), theta in [0, 2pi), the metric is
/// dr^2 + l^2 cosh^2(r) dtheta^2 with l = l_gamma / (2 pi). The collar C^u
/// is the set l_gamma cosh(r) < u, i.e. |r| < L_u = arccosh(u / l_gamma).
class CollarGeometry {
 public:
  explicit CollarGeometry(double l_gamma, double margulis = kDefaultMargulis);

  [[nodiscard]] double l_gamma() const noexcept { return l_gamma_; }
  /// Reduced length l_gamma / 2pi.
  [[nodiscard]] double l() const noexcept { return l_gamma_ / (2.0 * std::numbers::pi); }
  [[nodiscard]] double margulis() const noexcept { return margulis_; }

  /// L_u = arccosh(u / l_gamma); requires u >= l_gamma.
  [[nodiscard]] double boundary_radius(double u) const;
  /// L_1, the half width of the collar with boundary length 1.
  [[nodiscard]] double unit_radius() const { return boundary_radius(1.0); }

 private:
  double l_gamma_;
  double margulis_;
};

/// Cusp P^t bounded by a horocycle of length t.
///
/// Horocycle coordinates (r, theta): r >= 0 is the distance from the boundary,
/// theta the position along it. The metric coefficient below is written for
/// the angular parameter 2 pi theta / t in [0, 2pi).
class CuspGeometry {
 public:
  explicit CuspGeometry(double t);

  [[nodiscard]] double t() const noexcept { return t_; }
  /// Area by quadrature of the metric density; equals t.
  [[nodiscard]] double area(const Tolerances& tol = {}) const;

 private:
  double t_;
};

struct FermiPoint {
  double r = 0.0;
  double theta = 0.0;  ///< normalized to [0, 2pi)

  [[nodiscard]] static FermiPoint make(double r, double theta);
  [[nodiscard]] bool in_collar(const CollarGeometry& geom, double u) const;
};

struct HorocyclePoint {
  double r = 0.0;      ///< >= 0
  double theta = 0.0;  ///< normalized modulo t

  [[nodiscard]] static HorocyclePoint make(const CuspGeometry& geom, double r, double theta);
};

/// l cosh(r): the angular metric coefficient of the collar.
[[nodiscard]] double collar_metric_coeff(const CollarGeometry& geom, double r);

/// (t / 2pi) e^{-r}: the angular metric coefficient of the cusp. Requires r >= 0.
[[nodiscard]] double cusp_metric_coeff(const CuspGeometry& geom, double r);

/// Keen half width rho = arcsinh(1 / sinh(l_gamma / 2)).
[[nodiscard]] double keen_halfwidth(double l_gamma);
/// Boundary length w(l_gamma) = l_gamma cosh(rho) of the Keen collar.
[[nodiscard]] double keen_boundary_length(double l_gamma);

/// Distance rho - r inward from the right boundary of the Keen collar.
[[nodiscard]] double shifted_fermi(const CollarGeometry& geom, double r);

/// e^{-r}/pi: limit of the collar metric coefficient in shifted coordinates.
[[nodiscard]] double degenerate_limit_coeff(double r_shifted);

/// l cosh(r_shifted - rho): the collar coefficient written in the shifted
/// coordinate measured inward from the right boundary of the Keen collar.
/// Converges to degenerate_limit_coeff as l_gamma -> 0.
[[nodiscard]] double shifted_collar_coeff(const CollarGeometry& geom, double r_shifted);
/// shifted_collar_coeff - degenerate_limit_coeff without cancellation:
/// (e^{-r}/pi)(u coth u - 1) + (l_gamma / 4pi) e^{r} tanh u with u = l_gamma / 4.
[[nodiscard]] double shifted_collar_defect(const CollarGeometry& geom, double r_shifted);

}  // namespace hypmass
