#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace hypmass {

/// log(exp(a) + exp(b)) without overflow; -inf acts as the additive zero.
[[nodiscard]] inline double log_add(double a, double b) noexcept {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

/// log(exp(a) - exp(b)) for a >= b. Returns -inf when the difference vanishes.
[[nodiscard]] inline double log_sub(double a, double b) noexcept {
  if (b == -std::numeric_limits<double>::infinity()) return a;
  if (b >= a) return -std::numeric_limits<double>::infinity();
  return a + std::log1p(-std::exp(b - a));
}

/// Squared L2 norm of a function restricted to a named region.
///
/// Stored as a logarithm: masses of high Fourier modes on thin collars and
/// deep cusps under- or overflow a double by hundreds of orders of magnitude.
struct MassProfile {
  std::string region;
  double log_mass_sq = -std::numeric_limits<double>::infinity();

  [[nodiscard]] static MassProfile from_mass_sq(std::string region, double mass_sq) {
    return {std::move(region), mass_sq > 0.0 ? std::log(mass_sq)
                                             : -std::numeric_limits<double>::infinity()};
  }

  [[nodiscard]] double mass_sq() const noexcept { return std::exp(log_mass_sq); }
  [[nodiscard]] bool is_zero() const noexcept {
    return log_mass_sq == -std::numeric_limits<double>::infinity();
  }

  /// Scale the underlying function by `factor` (mass scales by factor^2).
  [[nodiscard]] MassProfile scaled(double factor) const {
    if (factor == 0.0) return {region, -std::numeric_limits<double>::infinity()};
    return {region, log_mass_sq + 2.0 * std::log(std::abs(factor))};
  }
};

/// Mass of the union of two disjoint regions.
[[nodiscard]] inline MassProfile disjoint_union(const MassProfile& a, const MassProfile& b,
                                                std::string region) {
  return {std::move(region), log_add(a.log_mass_sq, b.log_mass_sq)};
}

/// sqrt(numerator / denominator) computed in log space.
[[nodiscard]] inline double norm_ratio(const MassProfile& numerator,
                                       const MassProfile& denominator) noexcept {
  return std::exp(0.5 * (numerator.log_mass_sq - denominator.log_mass_sq));
}

}  // namespace hypmass
