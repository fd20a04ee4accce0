#pragma once

#include <functional>

#include "hypmass/tolerance.hpp"

namespace hypmass::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (7/15) on a finite interval [a, b].
///
/// Throws QuadratureError when the estimated error exceeds
/// max(tol.quad_abs, tol.quad_rel * |value|).
Result integrate(const Integrand& f, double a, double b, const Tolerances& tol = {});

/// Integral of f over [a, inf) for an integrand that decays at least like
/// exp(-rate * (y - a)). Uses y = a + tan(v) / rate on v in [0, pi/2).
Result integrate_tail(const Integrand& f, double a, double rate, const Tolerances& tol = {});

/// Same substitution restricted to [a, b] (b finite).
Result integrate_decaying(const Integrand& f, double a, double b, double rate,
                          const Tolerances& tol = {});

}  // namespace hypmass::quad
