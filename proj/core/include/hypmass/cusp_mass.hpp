#pragma once

#include <complex>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "hypmass/mass.hpp"
#include "hypmass/specfun.hpp"
#include "hypmass/tolerance.hpp"

namespace hypmass {

/// Cusp annulus P(a, b) = {a <= y < b} in the standard cusp (x has period 2 pi).
class Annulus {
 public:
  static constexpr double kInfinity = std::numeric_limits<double>::infinity();

  /// Requires 2 pi <= a < b (b may be kInfinity).
  [[nodiscard]] static Annulus make(double a, double b = kInfinity);

  [[nodiscard]] double a() const noexcept { return a_; }
  [[nodiscard]] double b() const noexcept { return b_; }
  [[nodiscard]] bool unbounded() const noexcept { return b_ == kInfinity; }

 private:
  Annulus(double a, double b) : a_(a), b_(b) {}
  double a_;
  double b_;
};

/// Fourier data of an eigenfunction in a cusp:
/// f = sum_n f_n W_s(nz) (+ f0 y^s in the residual regime).
struct CuspModeCoeffs {
  SpectralParam param = SpectralParam::from_s(1.0);
  std::map<int, std::complex<double>> cuspidal;
  std::optional<double> residual;

  [[nodiscard]] bool empty() const noexcept;
  /// Checks finite support, n != 0 and that f0 only appears in the residual regime.
  void validate() const;
};

namespace cusp {

/// ||W_s(n.)||^2 over P(a, b) = 2 pi int_a^b 4|n| K_{s-1/2}(|n|y)^2 dy / y.
[[nodiscard]] MassProfile whittaker_norm_sq(const SpectralParam& param, int n,
                                            const Annulus& annulus, const Tolerances& tol = {});

/// <W_s(n.), W_s(m.)> over P(a, b): radial quadrature times the phase quadrature
/// int_0^{2 pi} e^{i(n-m)x} dx.
[[nodiscard]] std::complex<double> whittaker_inner_product(const SpectralParam& param, int n, int m,
                                                           const Annulus& annulus,
                                                           const Tolerances& tol = {});

/// log of ||W_s(n.)||_{P(b,inf)} / ||W_s(n.)||_{P(2pi,b)}.
[[nodiscard]] double cuspidal_tail_log_ratio(const SpectralParam& param, int n, double b,
                                             const Tolerances& tol = {});
/// The same ratio (may underflow to 0 for large |n| b).
[[nodiscard]] double cuspidal_tail_ratio(const SpectralParam& param, int n, double b,
                                         const Tolerances& tol = {});

struct TailSweepRow {
  double b = 0.0;
  int n = 0;
  double s = 0.0;
  MassProfile band;
  MassProfile tail;
  double log_ratio = 0.0;

  [[nodiscard]] double ratio() const { return std::exp(log_ratio); }
};

struct KHatSweep {
  std::vector<TailSweepRow> rows;
  /// Empirical sup of the tail ratio over the (n, s) grid, one entry per b.
  std::vector<std::pair<double, double>> k_hat;

  [[nodiscard]] bool strictly_decreasing() const;
};

inline const std::vector<double> kDefaultSGrid{0.5, 0.625, 0.75, 0.875, 1.0};

/// Sweep of the cuspidal tail ratio over b in `b_values`, n in [1, n_max], s in `s_values`.
[[nodiscard]] KHatSweep sweep_k_hat(const std::vector<double>& b_values, int n_max = 8,
                                    const std::vector<double>& s_values = kDefaultSGrid,
                                    const Tolerances& tol = {});

/// Closed form 1/((b/2pi)^{1-2s} - 1), 0 < s < 1/2, b > 2 pi.
[[nodiscard]] double residual_tail_ratio_sq(double s, double b);
/// ||f0 y^s||^2 over P(a, b) = 2 pi f0^2 int_a^b y^{2s-2} dy by quadrature.
[[nodiscard]] MassProfile residual_norm_sq(double s, double f0, const Annulus& annulus,
                                           const Tolerances& tol = {});
/// Squared tail ratio of f0 y^s from quadrature of both regions.
[[nodiscard]] double residual_tail_ratio_sq_quadrature(double s, double b,
                                                       const Tolerances& tol = {});

struct LebedevTail {
  double value = 0.0;
  double leading = 0.0;
  double relative_deviation = 0.0;
};
/// int_{t1}^{t2} e^{-2 alpha y} / y^2 dy against its leading term e^{-2 alpha t1}/(2 alpha t1^2).
[[nodiscard]] LebedevTail lebedev_tail(double alpha, double t1,
                                       double t2 = Annulus::kInfinity,
                                       const Tolerances& tol = {});

/// Mass of the synthesized f over an annulus (modes are orthogonal).
[[nodiscard]] MassProfile mode_mass(const CuspModeCoeffs& coeffs, const Annulus& annulus,
                                    const Tolerances& tol = {});

struct CuspBoundRow {
  double eps = 0.0;
  /// Height 2 pi / eps where the horocycle length drops below eps.
  double b = 0.0;
  MassProfile band;
  MassProfile thin;
  double ratio = 0.0;
};

struct CuspBoundReport {
  std::vector<CuspBoundRow> rows;

  /// The measured ratio strictly decreases as eps decreases.
  [[nodiscard]] bool decreasing_as_eps_shrinks() const;
};

/// For each eps in (0, 1) compares the thin part P(2pi/eps, inf) with the band
/// P(2pi, 2pi/eps).
[[nodiscard]] CuspBoundReport cusp_mass_bound_check(const CuspModeCoeffs& coeffs,
                                                    const std::vector<double>& eps_grid,
                                                    const Tolerances& tol = {});

}  // namespace cusp
}  // namespace hypmass
