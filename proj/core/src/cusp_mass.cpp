#include "hypmass/cusp_mass.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypmass/error.hpp"
#include "hypmass/quadrature.hpp"

namespace hypmass {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// The cuspidal part of a residual eigenfunction uses W_s with s < 1/2, which
// coincides with W_{1-s} because K is even in its order.
SpectralParam cuspidal_equivalent(const SpectralParam& param) {
  if (param.regime() == SpectralParam::Regime::cuspidal_small) return param;
  return SpectralParam::from_s(1.0 - param.s());
}

// log of 2 pi int_a^b 4|n| K(|n|y)^2 / y dy; rate 2|n| factored out of the tail.
double whittaker_log_norm_sq(const SpectralParam& param, int n, double a, double b,
                             const Tolerances& tol) {
  const double an = std::abs(n);
  const double order = param.order();
  const auto f = [&](double y) {
    const double ks = specfun::mcdonald_k_scaled(order, an * y, tol);
    return 4.0 * an * ks * ks * std::exp(-2.0 * an * (y - a)) / y;
  };
  const double rate = 2.0 * an;
  const double integral = b == Annulus::kInfinity ? quad::integrate_tail(f, a, rate, tol).value
                                                  : quad::integrate_decaying(f, a, b, rate, tol).value;
  if (!(integral > 0.0)) throw QuadratureError("Whittaker norm: vanishing integral", integral);
  return std::log(kTwoPi) - 2.0 * an * a + std::log(integral);
}

}  // namespace

Annulus Annulus::make(double a, double b) {
  if (!std::isfinite(a) || a < kTwoPi * (1.0 - 1e-15))
    throw DomainError("annulus: lower height must be at least 2 pi");
  if (!(b > a)) throw DomainError("annulus: upper height must exceed the lower height");
  return {a, b};
}

bool CuspModeCoeffs::empty() const noexcept {
  const bool no_cuspidal = std::all_of(cuspidal.begin(), cuspidal.end(),
                                       [](const auto& kv) { return kv.second == 0.0; });
  return no_cuspidal && (!residual || *residual == 0.0);
}

void CuspModeCoeffs::validate() const {
  for (const auto& [n, c] : cuspidal) {
    if (n == 0) throw DomainError("cusp coefficients: index 0 belongs to the residual term");
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw DomainError("cusp coefficients: non-finite coefficient");
  }
  if (residual) {
    if (param.regime() != SpectralParam::Regime::residual)
      throw DomainError("cusp coefficients: f0 requires the residual regime s in (0, 1/2)");
    if (!std::isfinite(*residual)) throw DomainError("cusp coefficients: non-finite f0");
  }
}

namespace cusp {

MassProfile whittaker_norm_sq(const SpectralParam& param, int n, const Annulus& annulus,
                              const Tolerances& tol) {
  if (n == 0) throw DomainError("Whittaker norm: n = 0 is not a Whittaker mode");
  if (param.regime() != SpectralParam::Regime::cuspidal_small)
    throw DomainError("Whittaker norm: requires s in [1/2, 1]");
  return {"P(a,b)", whittaker_log_norm_sq(param, n, annulus.a(), annulus.b(), tol)};
}

std::complex<double> whittaker_inner_product(const SpectralParam& param, int n, int m,
                                             const Annulus& annulus, const Tolerances& tol) {
  if (n == 0 || m == 0) throw DomainError("Whittaker inner product: n, m must be nonzero");
  if (param.regime() != SpectralParam::Regime::cuspidal_small)
    throw DomainError("Whittaker inner product: requires s in [1/2, 1]");
  const double a = annulus.a();
  const double rate = static_cast<double>(std::abs(n) + std::abs(m));
  // Radial integrand with the e^{-(|n|+|m|)(y-a)} decay factored out.
  const auto scaled = [&](double y) {
    const double an = std::abs(n);
    const double am = std::abs(m);
    const double kn = specfun::mcdonald_k_scaled(param.order(), an * y, tol);
    const double km = specfun::mcdonald_k_scaled(param.order(), am * y, tol);
    return 4.0 * std::sqrt(an * am) * kn * km / y * std::exp(-rate * (y - a));
  };
  const double r = (annulus.unbounded() ? quad::integrate_tail(scaled, a, rate, tol)
                                        : quad::integrate_decaying(scaled, a, annulus.b(), rate, tol))
                       .value *
                   std::exp(-rate * a);
  const int k = n - m;
  const double re = quad::integrate([k](double x) { return std::cos(k * x); }, 0.0, kTwoPi, tol).value;
  const double im = quad::integrate([k](double x) { return std::sin(k * x); }, 0.0, kTwoPi, tol).value;
  return r * std::complex<double>(re, im);
}

double cuspidal_tail_log_ratio(const SpectralParam& param, int n, double b,
                               const Tolerances& tol) {
  if (!(b > kTwoPi)) throw DomainError("tail ratio: b must exceed 2 pi");
  if (n == 0) throw DomainError("tail ratio: n = 0 is not a Whittaker mode");
  const double band = whittaker_log_norm_sq(param, n, kTwoPi, b, tol);
  const double tail = whittaker_log_norm_sq(param, n, b, Annulus::kInfinity, tol);
  if (!std::isfinite(band)) throw QuadratureError("tail ratio: degenerate band norm", 0.0);
  return 0.5 * (tail - band);
}

double cuspidal_tail_ratio(const SpectralParam& param, int n, double b, const Tolerances& tol) {
  return std::exp(cuspidal_tail_log_ratio(param, n, b, tol));
}

bool KHatSweep::strictly_decreasing() const {
  for (std::size_t i = 1; i < k_hat.size(); ++i)
    if (!(k_hat[i].second < k_hat[i - 1].second)) return false;
  return !k_hat.empty();
}

KHatSweep sweep_k_hat(const std::vector<double>& b_values, int n_max,
                      const std::vector<double>& s_values, const Tolerances& tol) {
  if (b_values.empty() || s_values.empty() || n_max < 1)
    throw DomainError("K-hat sweep: empty grid");
  KHatSweep out;
  for (double b : b_values) {
    double sup_log = -std::numeric_limits<double>::infinity();
    for (int n = 1; n <= n_max; ++n) {
      for (double s : s_values) {
        const SpectralParam param = SpectralParam::from_s(s);
        TailSweepRow row;
        row.b = b;
        row.n = n;
        row.s = s;
        row.band = {"P(2pi,b)", whittaker_log_norm_sq(param, n, kTwoPi, b, tol)};
        row.tail = {"P(b,inf)", whittaker_log_norm_sq(param, n, b, Annulus::kInfinity, tol)};
        row.log_ratio = 0.5 * (row.tail.log_mass_sq - row.band.log_mass_sq);
        sup_log = std::max(sup_log, row.log_ratio);
        out.rows.push_back(row);
      }
    }
    out.k_hat.emplace_back(b, std::exp(sup_log));
  }
  return out;
}

double residual_tail_ratio_sq(double s, double b) {
  if (!(s > 0.0) || !(s < 0.5)) throw DomainError("residual ratio: s must lie in (0, 1/2)");
  if (!(b > kTwoPi)) throw DomainError("residual ratio: b must exceed 2 pi");
  return 1.0 / std::expm1((1.0 - 2.0 * s) * std::log(b / kTwoPi));
}

MassProfile residual_norm_sq(double s, double f0, const Annulus& annulus, const Tolerances& tol) {
  if (!(s > 0.0) || !(s < 0.5)) throw DomainError("residual norm: s must lie in (0, 1/2)");
  // y = a e^x turns y^{2s-2} dy into a^{2s-1} e^{-(1-2s) x} dx.
  const double rate = 1.0 - 2.0 * s;
  const auto f = [rate](double x) { return std::exp(-rate * x); };
  const double a = annulus.a();
  const double integral =
      annulus.unbounded()
          ? quad::integrate_tail(f, 0.0, rate, tol).value
          : quad::integrate_decaying(f, 0.0, std::log(annulus.b() / a), rate, tol).value;
  if (f0 == 0.0) return {"P(a,b)", -std::numeric_limits<double>::infinity()};
  return {"P(a,b)", std::log(kTwoPi) + 2.0 * std::log(std::abs(f0)) -
                        rate * std::log(a) + std::log(integral)};
}

double residual_tail_ratio_sq_quadrature(double s, double b, const Tolerances& tol) {
  const MassProfile band = residual_norm_sq(s, 1.0, Annulus::make(kTwoPi, b), tol);
  const MassProfile tail = residual_norm_sq(s, 1.0, Annulus::make(b), tol);
  return std::exp(tail.log_mass_sq - band.log_mass_sq);
}

LebedevTail lebedev_tail(double alpha, double t1, double t2, const Tolerances& tol) {
  if (!(alpha > 1.0)) throw DomainError("Lebedev tail: alpha must exceed 1");
  if (!(t1 > 1.0) || !(t2 > t1)) throw DomainError("Lebedev tail: requires 1 < t1 < t2");
  const double rate = 2.0 * alpha;
  const auto f = [=](double y) { return std::exp(-rate * (y - t1)) / (y * y); };
  const double scaled = t2 == Annulus::kInfinity
                            ? quad::integrate_tail(f, t1, rate, tol).value
                            : quad::integrate_decaying(f, t1, t2, rate, tol).value;
  const double scaled_leading = 1.0 / (rate * t1 * t1);
  const double factor = std::exp(-rate * t1);
  return {scaled * factor, scaled_leading * factor,
          std::abs(scaled - scaled_leading) / scaled_leading};
}

MassProfile mode_mass(const CuspModeCoeffs& coeffs, const Annulus& annulus,
                      const Tolerances& tol) {
  coeffs.validate();
  const SpectralParam w = cuspidal_equivalent(coeffs.param);
  double log_total = -std::numeric_limits<double>::infinity();
  for (const auto& [n, c] : coeffs.cuspidal) {
    if (c == 0.0) continue;
    const double lm = whittaker_log_norm_sq(w, n, annulus.a(), annulus.b(), tol);
    log_total = log_add(log_total, lm + 2.0 * std::log(std::abs(c)));
  }
  if (coeffs.residual && *coeffs.residual != 0.0)
    log_total = log_add(log_total,
                        residual_norm_sq(coeffs.param.s(), *coeffs.residual, annulus, tol).log_mass_sq);
  return {"P(a,b)", log_total};
}

bool CuspBoundReport::decreasing_as_eps_shrinks() const {
  std::vector<CuspBoundRow> sorted = rows;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& l, const auto& r) { return l.eps > r.eps; });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (!(sorted[i].ratio < sorted[i - 1].ratio)) return false;
  return !sorted.empty();
}

CuspBoundReport cusp_mass_bound_check(const CuspModeCoeffs& coeffs,
                                      const std::vector<double>& eps_grid,
                                      const Tolerances& tol) {
  coeffs.validate();
  if (coeffs.empty()) throw DomainError("cusp bound check: zero function");
  if (eps_grid.empty()) throw DomainError("cusp bound check: empty eps grid");
  CuspBoundReport report;
  for (double eps : eps_grid) {
    if (!(eps > 0.0) || !(eps < 1.0)) throw DomainError("cusp bound check: eps must lie in (0, 1)");
    CuspBoundRow row;
    row.eps = eps;
    row.b = kTwoPi / eps;
    row.band = mode_mass(coeffs, Annulus::make(kTwoPi, row.b), tol);
    row.band.region = "band";
    row.thin = mode_mass(coeffs, Annulus::make(row.b), tol);
    row.thin.region = "thin";
    row.ratio = norm_ratio(row.thin, row.band);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace cusp
}  // namespace hypmass
