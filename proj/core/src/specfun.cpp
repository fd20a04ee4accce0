#include "hypmass/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "hypmass/error.hpp"
#include "hypmass/quadrature.hpp"

namespace hypmass {

namespace {

constexpr double kPi = std::numbers::pi;
// Integrand truncated where it has fallen below e^{-45} of its peak.
constexpr double kTruncationLog = 45.0;

void check_order(double eps) {
  if (!std::isfinite(eps) || std::abs(eps) > 0.5)
    throw DomainError("McDonald order must satisfy |eps| <= 1/2");
}

void check_argument(double y) {
  if (!(y > 0.0) || !std::isfinite(y))
    throw DomainError("McDonald argument must be positive and finite");
}

// cosh(u) - 1 without cancellation.
double cosh_m1(double u) {
  const double s = std::sinh(0.5 * u);
  return 2.0 * s * s;
}

// Smallest U (approximately) with y (cosh U - cosh u0) - |eps| (U - u0) >= target.
double truncation_point(double eps, double y, double u0) {
  const double ae = std::abs(eps);
  const double base = std::cosh(u0);
  double U = std::acosh(base + kTruncationLog / y);
  for (int i = 0; i < 8; ++i) U = std::acosh(base + (kTruncationLog + ae * (U - u0)) / y);
  return std::max(U, u0 + 1e-3);
}

// exp(-y (cosh u - 1)) cosh(eps u): the integrand scaled by e^{y}.
double scaled_integrand(double eps, double y, double u) {
  return std::exp(-y * cosh_m1(u)) * std::cosh(eps * u);
}

}  // namespace

SpectralParam SpectralParam::from_lambda(double lambda, Regime regime) {
  if (!(lambda >= 0.0) || lambda > 0.25)
    throw DomainError("spectral parameter: lambda must lie in [0, 1/4]");
  const double root = std::sqrt(0.25 - lambda);
  if (regime == Regime::residual) {
    if (!(lambda > 0.0) || !(root > 0.0))
      throw DomainError("spectral parameter: residual regime needs 0 < lambda < 1/4");
    return {lambda, 0.5 - root, regime};
  }
  return {lambda, 0.5 + root, regime};
}

SpectralParam SpectralParam::from_s(double s) {
  if (!(s > 0.0) || s > 1.0) throw DomainError("spectral parameter: s must lie in (0, 1]");
  const Regime regime = s >= 0.5 ? Regime::cuspidal_small : Regime::residual;
  return {s * (1.0 - s), s, regime};
}

double SpectralParam::order() const noexcept { return std::abs(s_ - 0.5); }

namespace specfun {

double gamma0() noexcept { return std::cosh(1.0) - 1.0; }

double gamma0_partial_sum(int terms) {
  if (terms < 0) throw DomainError("gamma0_partial_sum: negative term count");
  double sum = 0.0;
  double term = 1.0;  // 1/(2n)!
  for (int n = 1; n <= terms; ++n) {
    term /= static_cast<double>((2 * n - 1) * (2 * n));
    sum += term;
  }
  return sum;
}

double delta0(double y) noexcept {
  const double g = gamma0();
  return 4.0 * std::cosh(1.0) / g * std::exp(-g * y);
}

double delta_tail(double eps, double y) {
  check_argument(y);
  const double g = gamma0();
  if (!(g - eps / y > 0.0)) throw DomainError("delta_tail: requires gamma0 > eps / y");
  return std::exp(-(y * g + eps)) / (g + eps / y) + std::exp(-(y * g - eps)) / (g - eps / y);
}

double bound_threshold() noexcept { return 2.0 / gamma0(); }

double mcdonald_k_scaled(double eps, double y, const Tolerances& tol) {
  check_order(eps);
  check_argument(y);
  const double U = truncation_point(eps, y, 0.0);
  const auto f = [eps, y](double u) { return scaled_integrand(eps, y, u); };
  return quad::integrate(f, 0.0, U, tol).value;
}

double mcdonald_k(double eps, double y, const Tolerances& tol) {
  return std::exp(-y) * mcdonald_k_scaled(eps, y, tol);
}

KSplit k_split(double eps, double y, const Tolerances& tol) {
  check_order(eps);
  check_argument(y);
  const auto f = [eps, y](double u) { return scaled_integrand(eps, y, u); };
  const double central = quad::integrate(f, 0.0, 1.0, tol).value;
  const double U = truncation_point(eps, y, 1.0);
  const double outer = quad::integrate(f, 1.0, U, tol).value;
  const double scale = 2.0 * std::exp(-y);
  return {scale * central, scale * outer};
}

KBounds k_two_sided_bounds(double eps, double y, double threshold) {
  if (!(eps >= 0.0) || eps > 0.5) throw DomainError("two-sided bound: eps must lie in [0, 1/2]");
  check_argument(y);
  if (!(y >= threshold))
    throw DomainError("two-sided bound: y below the validity threshold");
  const double base = std::exp(-y) / y;
  const double lower = 2.0 * std::exp(-eps) * base * (-std::expm1(-y));
  const double upper = base * (2.0 * kPi * std::exp(eps) + delta0(y));
  return {lower, upper};
}

KBoundCheck check_k_bounds(double eps, double y, const Tolerances& tol, double threshold) {
  const KBounds b = k_two_sided_bounds(eps, y, threshold);
  return {eps, y, b.lower, mcdonald_k(eps, y, tol), b.upper};
}

CBoundCheck check_c_bounds(double eps, double y, const Tolerances& tol) {
  const KSplit split = k_split(eps, y, tol);
  const double base = std::exp(-y) / y;
  return {2.0 * std::exp(-eps) * base * (-std::expm1(-y)), split.c,
          2.0 * kPi * std::exp(eps) * base};
}

double whittaker_radial(const SpectralParam& param, int n, double y, const Tolerances& tol) {
  if (n == 0) throw DomainError("Whittaker mode: n = 0 is the constant term, not a Whittaker mode");
  if (param.regime() != SpectralParam::Regime::cuspidal_small)
    throw DomainError("Whittaker mode: requires s in [1/2, 1]");
  check_argument(y);
  const double arg = std::abs(n) * y;
  return 2.0 * std::sqrt(arg) * mcdonald_k(param.s() - 0.5, arg, tol);
}

std::complex<double> whittaker_mode(const SpectralParam& param, int n, double x, double y,
                                    const Tolerances& tol) {
  return whittaker_radial(param, n, y, tol) * std::polar(1.0, n * x);
}

}  // namespace specfun
}  // namespace hypmass
