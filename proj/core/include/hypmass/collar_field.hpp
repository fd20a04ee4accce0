#pragma once

#include <iosfwd>
#include <vector>

#include "hypmass/collar_modes.hpp"
#include "hypmass/mass.hpp"

namespace hypmass {

/// Combination coefficients of one Fourier mode j:
/// a_j = a s_j + b c_j and b_j = a_prime s_j + b_prime c_j.
/// For j = 0 only a and b are used (there is no sin term).
struct FieldCoefficients {
  int j = 0;
  double a = 0.0;
  double b = 0.0;
  double a_prime = 0.0;
  double b_prime = 0.0;
};

/// boundary: s_j and c_j are divided by their value at r = L_1 (keeps every
/// generator of order one on the collar boundary). raw: the solutions as defined
/// by their initial data at r = 0.
enum class GeneratorNormalization { boundary, raw };

struct FieldOptions {
  int r_points = 2048;
  int theta_points = 256;
  GeneratorNormalization normalization = GeneratorNormalization::boundary;
  Tolerances tol{};
};

/// Eigenfunction-type field f(r, theta) = a_0(r) + sum_j a_j(r) cos(j theta) + b_j(r) sin(j theta)
/// sampled on a uniform (r, theta) grid over the collar C^1.
class CollarField {
 public:
  struct Coefficients {
    std::vector<int> j;
    std::vector<double> a;
    std::vector<double> b;
  };

  CollarField(CollarGeometry geom, SpectralParam param, std::vector<FieldCoefficients> coeffs,
              FieldOptions options);

  [[nodiscard]] const CollarGeometry& geometry() const noexcept { return geom_; }
  [[nodiscard]] const SpectralParam& param() const noexcept { return param_; }
  [[nodiscard]] const std::vector<double>& r_grid() const noexcept { return r_; }
  [[nodiscard]] const std::vector<double>& theta_grid() const noexcept { return theta_; }
  [[nodiscard]] std::size_t r_points() const noexcept { return r_.size(); }
  [[nodiscard]] std::size_t theta_points() const noexcept { return theta_.size(); }

  /// f at grid point (i, k).
  [[nodiscard]] double value(std::size_t i, std::size_t k) const { return values_[i * theta_.size() + k]; }
  /// [f]_0 = a_0(r_i).
  [[nodiscard]] double zero_mode(std::size_t i) const { return coeff_a_[0][i]; }
  /// [f]_1 = f - [f]_0 at grid point (i, k), summed over j >= 1 (no cancellation against [f]_0).
  [[nodiscard]] double first_mode(std::size_t i, std::size_t k) const { return first_values_[i * theta_.size() + k]; }

  /// f on the boundary component r = +L_1 (side > 0) or r = -L_1 (side < 0).
  [[nodiscard]] std::vector<double> boundary_trace(int side) const;
  /// max |f| over both boundary traces.
  [[nodiscard]] double boundary_sup() const;

  /// Fourier coefficients (a_j(r), b_j(r)) at an arbitrary |r| <= L_1.
  [[nodiscard]] Coefficients coefficients_at(double r) const;
  /// f(r, theta) for each theta of the grid at an arbitrary r.
  [[nodiscard]] std::vector<double> trace_at(double r) const;
  /// [f]_1(r, theta) for each theta of the grid at an arbitrary r.
  [[nodiscard]] std::vector<double> first_mode_trace_at(double r) const;

  /// (1/pi) int_0^{2pi} f(r_i, theta) cos(j theta) dtheta by the periodic trapezoid rule
  /// ((1/2pi) for j = 0); `sine` selects sin(j theta).
  [[nodiscard]] double extract_fourier(std::size_t i, int j, bool sine = false) const;

  /// Squared L2 norm on C^1 from the Fourier coefficients, using the solver's
  /// integrated masses of s_j and c_j.
  [[nodiscard]] MassProfile parseval_mass() const;
  /// Squared L2 norm on C^1 by direct grid quadrature of f^2 l cosh(r).
  [[nodiscard]] MassProfile grid_mass() const;

  /// Plain-text grid dump, one "r theta value" line per point.
  enum class Component { full, zero_mode, first_mode };
  void write_grid(std::ostream& out, Component component = Component::full) const;

  /// Returns a copy with every coefficient multiplied by `factor`.
  [[nodiscard]] CollarField scaled(double factor) const;

 private:
  struct Generator {
    ModeSolution solution;
    double log_norm;  ///< log |generator(L_1)| for boundary normalization, else 0
    double sign;
  };

  [[nodiscard]] double generator_value(const Generator& g, const ModeState& st) const;

  CollarGeometry geom_;
  SpectralParam param_;
  std::vector<FieldCoefficients> coeffs_;
  FieldOptions options_;
  std::vector<double> r_;
  std::vector<double> theta_;
  std::vector<Generator> s_gen_;
  std::vector<Generator> c_gen_;
  std::vector<std::vector<double>> coeff_a_;  ///< a_j(r_i) per coefficient entry
  std::vector<std::vector<double>> coeff_b_;
  std::vector<double> values_;
  std::vector<double> first_values_;
};

/// Assembles a field from per-mode combination coefficients. Entries with the
/// same j are summed; the first coefficient array entry is always j = 0.
[[nodiscard]] CollarField synthesize_field(const CollarGeometry& geom, const SpectralParam& param,
                                           const std::vector<FieldCoefficients>& coeffs,
                                           const FieldOptions& options = {});

/// sum_{j>=1} cosh(j r)/sqrt(cosh r) * sqrt(cosh L_1)/cosh(j L_1), summed to convergence.
[[nodiscard]] double tail_series(const CollarGeometry& geom, double r);
/// sum_{j>=1} eps^j eps^{-1/2}, summed term by term; equals eps^{1/2}/(1 - eps).
[[nodiscard]] double geometric_tail_sum(double eps);
/// cosh(j r)/sqrt(cosh r).
[[nodiscard]] double tail_profile(int j, double r);

struct TailBoundReport {
  double eps = 0.0;
  double t_boundary = 0.0;
  double boundary_sup = 0.0;
  double sup_first_mode = 0.0;  ///< sup over C^eps of |[f]_1|
  double series_max = 0.0;      ///< max over |r| <= L_eps of the tail series
  double k_prime = 0.0;
  double bound = 0.0;           ///< 2 t K' eps^{1/2} / (1 - eps)

  [[nodiscard]] bool pass() const noexcept { return sup_first_mode <= bound; }
};

/// Bounds sup_{C^eps} |[f]_1| from the boundary size t. Throws DomainError if
/// the boundary sup exceeds t/4.
[[nodiscard]] TailBoundReport tail_bound_check(const CollarField& field, double eps,
                                               double t_boundary);

}  // namespace hypmass
