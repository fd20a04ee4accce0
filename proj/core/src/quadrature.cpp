#include "hypmass/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hypmass/error.hpp"

namespace hypmass {

Tolerances tolerance_profile(std::string_view name) {
  if (name == "default") return {};
  if (name == "strict") return {1e-14, 1e-12, 1e-15, 1e-13};
  if (name == "fast") return {1e-10, 1e-8, 1e-12, 1e-10};
  throw ConfigError("unknown tolerance profile '" + std::string(name) + "'");
}

Tolerances tolerance_profile_from_env() {
  const char* name = std::getenv("HYPMASS_TOLERANCE_PROFILE");
  if (name == nullptr || *name == '\0') return {};
  return tolerance_profile(name);
}

namespace quad {

namespace {

constexpr unsigned kMaxDepth = 30;

Result run(const Integrand& f, double a, double b, const Tolerances& tol) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  // Boost terminates on error <= tol * L1; ask a little more than the contract.
  const double requested = std::max(tol.quad_rel * 0.1, 1e-15);
  double error = 0.0;
  double l1 = 0.0;
  const double value = GK::integrate(f, a, b, kMaxDepth, requested, &error, &l1);
  if (!std::isfinite(value))
    throw QuadratureError("quadrature produced a non-finite value", error);
  const double allowed = std::max(tol.quad_abs, tol.quad_rel * std::max(std::abs(value), l1));
  if (error > allowed) {
    std::ostringstream msg;
    msg << "quadrature did not converge on [" << a << ", " << b << "]: estimated error "
        << error << " exceeds " << allowed;
    throw QuadratureError(msg.str(), error);
  }
  return {value, error};
}

}  // namespace

Result integrate(const Integrand& f, double a, double b, const Tolerances& tol) {
  if (a == b) return {};
  return run(f, a, b, tol);
}

Result integrate_tail(const Integrand& f, double a, double rate, const Tolerances& tol) {
  if (!(rate > 0.0)) throw DomainError("integrate_tail: decay rate must be positive");
  const auto g = [&](double v) {
    const double t = std::tan(v);
    const double c = std::cos(v);
    const double y = a + t / rate;
    if (!std::isfinite(y)) return 0.0;
    const double fy = f(y);
    return fy == 0.0 ? 0.0 : fy / (rate * c * c);
  };
  return run(g, 0.0, 0.5 * std::numbers::pi, tol);
}

Result integrate_decaying(const Integrand& f, double a, double b, double rate,
                          const Tolerances& tol) {
  if (!(rate > 0.0)) throw DomainError("integrate_decaying: decay rate must be positive");
  if (a == b) return {};
  const double vmax = std::atan((b - a) * rate);
  const auto g = [&](double v) {
    const double c = std::cos(v);
    return f(a + std::tan(v) / rate) / (rate * c * c);
  };
  return run(g, 0.0, vmax, tol);
}

}  // namespace quad
}  // namespace hypmass
