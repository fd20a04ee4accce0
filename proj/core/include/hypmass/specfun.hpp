#pragma once

#include <complex>

#include "hypmass/tolerance.hpp"

namespace hypmass {

/// Laplace eigenvalue lambda together with s, lambda = s (1 - s).
///
/// The cuspidal-small regime takes s in [1/2, 1] (lambda in [0, 1/4]); the
/// residual regime takes s in (0, 1/2) (lambda in (0, 1/4)).
class SpectralParam {
 public:
  enum class Regime { cuspidal_small, residual };

  [[nodiscard]] static SpectralParam from_lambda(double lambda,
                                                 Regime regime = Regime::cuspidal_small);
  [[nodiscard]] static SpectralParam from_s(double s);

  [[nodiscard]] double lambda() const noexcept { return lambda_; }
  [[nodiscard]] double s() const noexcept { return s_; }
  [[nodiscard]] Regime regime() const noexcept { return regime_; }
  /// Order |s - 1/2| of the McDonald function in the Whittaker modes.
  [[nodiscard]] double order() const noexcept;

 private:
  SpectralParam(double lambda, double s, Regime regime)
      : lambda_(lambda), s_(s), regime_(regime) {}

  double lambda_;
  double s_;
  Regime regime_;
};

namespace specfun {

/// gamma_0 = sum_{n>=1} 1/(2n)! = cosh(1) - 1.
[[nodiscard]] double gamma0() noexcept;
/// Partial sum of the gamma_0 series with `terms` terms.
[[nodiscard]] double gamma0_partial_sum(int terms);
/// delta_0(y) = (4 cosh 1 / gamma_0) e^{-gamma_0 y}.
[[nodiscard]] double delta0(double y) noexcept;
/// Exact tail majorant delta(eps, y) of the |u| > 1 part; delta < delta0 for
/// eps < 1 and y >= 2/gamma_0.
[[nodiscard]] double delta_tail(double eps, double y);
/// Default lower validity threshold 2/gamma_0 of the two-sided bound.
[[nodiscard]] double bound_threshold() noexcept;

/// K_eps(y) = (1/2) int_R exp(-y cosh u - eps u) du by adaptive quadrature.
/// |eps| <= 1/2 (negative orders via K_{-eps} = K_eps), y > 0.
[[nodiscard]] double mcdonald_k(double eps, double y, const Tolerances& tol = {});
/// e^y K_eps(y); finite for arguments where K itself underflows.
[[nodiscard]] double mcdonald_k_scaled(double eps, double y, const Tolerances& tol = {});

/// c = int_{-1}^{1}, d = int_{|u|>1} of exp(-y cosh u - eps u); K = (c + d) / 2.
struct KSplit {
  double c = 0.0;
  double d = 0.0;
};
[[nodiscard]] KSplit k_split(double eps, double y, const Tolerances& tol = {});

struct KBounds {
  double lower = 0.0;
  double upper = 0.0;
};
/// lower = 2e^{-eps}(e^{-y}/y)(1 - e^{-y}), upper = (e^{-y}/y)(2 pi e^{eps} + delta0(y)).
/// Requires eps in [0, 1/2] and y >= threshold.
[[nodiscard]] KBounds k_two_sided_bounds(double eps, double y,
                                         double threshold = bound_threshold());

/// Evaluated two-sided bound; `holds()` is the strict contract lower < K < upper.
struct KBoundCheck {
  double eps = 0.0;
  double y = 0.0;
  double lower = 0.0;
  double value = 0.0;
  double upper = 0.0;

  [[nodiscard]] bool lower_holds() const noexcept { return lower < value; }
  [[nodiscard]] bool upper_holds() const noexcept { return value < upper; }
  [[nodiscard]] bool holds() const noexcept { return lower_holds() && upper_holds(); }
};
[[nodiscard]] KBoundCheck check_k_bounds(double eps, double y, const Tolerances& tol = {},
                                         double threshold = bound_threshold());

/// Bounds on the central piece c(eps, y):
/// 2e^{-eps}(e^{-y}/y)(1 - e^{-y}) <= c <= 2 pi e^{eps} e^{-y}/y.
struct CBoundCheck {
  double lower = 0.0;
  double value = 0.0;
  double upper = 0.0;

  [[nodiscard]] bool lower_holds() const noexcept { return lower <= value; }
  [[nodiscard]] bool upper_holds() const noexcept { return value <= upper; }
};
[[nodiscard]] CBoundCheck check_c_bounds(double eps, double y, const Tolerances& tol = {});

/// Radial part 2 (|n| y)^{1/2} K_{s-1/2}(|n| y) of the Whittaker mode W_s(nz).
/// Requires the cuspidal-small regime and n != 0.
[[nodiscard]] double whittaker_radial(const SpectralParam& param, int n, double y,
                                      const Tolerances& tol = {});
/// Full mode W_s(nz) = radial * e^{inx} at z = x + iy.
[[nodiscard]] std::complex<double> whittaker_mode(const SpectralParam& param, int n, double x,
                                                  double y, const Tolerances& tol = {});

}  // namespace specfun
}  // namespace hypmass
