#include "hypmass/geometry.hpp"

#include <cmath>
#include <numbers>

#include "hypmass/error.hpp"
#include "hypmass/quadrature.hpp"

namespace hypmass {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double arccosh(double x) {
  if (!(x >= 1.0)) throw DomainError("arccosh: argument below 1");
  if (x > 1e150) return std::log(x) + std::numbers::ln2;
  // log(x + sqrt(x^2 - 1)) with the near-1 part kept in log1p.
  const double xm1 = x - 1.0;
  return std::log1p(xm1 + std::sqrt(xm1 * (x + 1.0)));
}

double arcsinh(double x) {
  const double ax = std::abs(x);
  double v;
  if (ax > 1e150) {
    v = std::log(ax) + std::numbers::ln2;
  } else {
    const double s = std::sqrt(1.0 + ax * ax);
    v = std::log1p(ax + ax * ax / (1.0 + s));
  }
  return std::copysign(v, x);
}

CollarGeometry::CollarGeometry(double l_gamma, double margulis)
    : l_gamma_(l_gamma), margulis_(margulis) {
  if (!(l_gamma > 0.0) || !std::isfinite(l_gamma))
    throw DomainError("collar: l_gamma must be positive and finite");
  if (!(margulis > 0.0) || !std::isfinite(margulis))
    throw DomainError("collar: Margulis constant must be positive");
}

double CollarGeometry::boundary_radius(double u) const {
  if (!(u >= l_gamma_))
    throw DomainError("collar: boundary length below core length, band is empty");
  return arccosh(u / l_gamma_);
}

CuspGeometry::CuspGeometry(double t) : t_(t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("cusp: t must be positive");
}

double CuspGeometry::area(const Tolerances& tol) const {
  // Integrate the angular coefficient over [0, 2pi) x [0, inf).
  const auto density = [this](double r) { return kTwoPi * cusp_metric_coeff(*this, r); };
  return quad::integrate_tail(density, 0.0, 1.0, tol).value;
}

FermiPoint FermiPoint::make(double r, double theta) {
  double th = std::fmod(theta, kTwoPi);
  if (th < 0.0) th += kTwoPi;
  return {r, th};
}

bool FermiPoint::in_collar(const CollarGeometry& geom, double u) const {
  return std::abs(r) <= geom.boundary_radius(u);
}

HorocyclePoint HorocyclePoint::make(const CuspGeometry& geom, double r, double theta) {
  if (!(r >= 0.0)) throw DomainError("horocycle point: r must be nonnegative");
  double th = std::fmod(theta, geom.t());
  if (th < 0.0) th += geom.t();
  return {r, th};
}

double collar_metric_coeff(const CollarGeometry& geom, double r) {
  return geom.l() * std::cosh(r);
}

double cusp_metric_coeff(const CuspGeometry& geom, double r) {
  if (!(r >= 0.0)) throw DomainError("cusp metric: r must be nonnegative");
  return geom.t() / kTwoPi * std::exp(-r);
}

double keen_halfwidth(double l_gamma) {
  if (!(l_gamma > 0.0)) throw DomainError("keen: l_gamma must be positive");
  return arcsinh(1.0 / std::sinh(0.5 * l_gamma));
}

double keen_boundary_length(double l_gamma) {
  if (!(l_gamma > 0.0)) throw DomainError("keen: l_gamma must be positive");
  // cosh(arcsinh(1/sinh x)) = coth x
  return l_gamma / std::tanh(0.5 * l_gamma);
}

double shifted_fermi(const CollarGeometry& geom, double r) {
  return keen_halfwidth(geom.l_gamma()) - r;
}

double degenerate_limit_coeff(double r_shifted) {
  return std::exp(-r_shifted) / std::numbers::pi;
}

double shifted_collar_coeff(const CollarGeometry& geom, double r_shifted) {
  return geom.l() * std::cosh(r_shifted - keen_halfwidth(geom.l_gamma()));
}

double shifted_collar_defect(const CollarGeometry& geom, double r_shifted) {
  const double u = 0.25 * geom.l_gamma();
  double ucothu_m1;
  if (u < 0.1) {
    const double u2 = u * u;
    ucothu_m1 = u2 * (1.0 / 3.0 - u2 * (1.0 / 45.0 - u2 * (2.0 / 945.0 - u2 / 4725.0)));
  } else {
    ucothu_m1 = u / std::tanh(u) - 1.0;
  }
  return std::exp(-r_shifted) / std::numbers::pi * ucothu_m1 +
         geom.l_gamma() / (2.0 * kTwoPi) * std::exp(r_shifted) * std::tanh(u);
}

}  // namespace hypmass
