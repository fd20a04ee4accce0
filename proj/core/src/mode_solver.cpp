#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <boost/numeric/odeint.hpp>

#include "hypmass/collar_modes.hpp"
#include "hypmass/error.hpp"

namespace hypmass {

namespace {

namespace odeint = boost::numeric::odeint;

using State = std::array<double, 3>;
using Stepper = odeint::runge_kutta_fehlberg78<State>;

constexpr double kRescaleValue = 1e30;
constexpr double kRescaleMass = 1e60;
constexpr long kMaxSteps = 50'000'000;
constexpr double kStencilMargin = 1e-2;

class Integrator {
 public:
  Integrator(const ModeODE& ode, const Tolerances& tol)
      : ode_(ode), lambda_(ode.param.lambda()), tol_(tol) {}

  [[nodiscard]] double initial_step(double r) const {
    return std::min(1e-3, 0.05 / std::sqrt(1.0 + ode_.potential(r)));
  }

  // Advances `st` to `target`; `dt` carries the suggested step magnitude.
  void advance(ModeState& st, double target, double& dt) const {
    auto stepper = odeint::make_controlled<Stepper>(tol_.ode_abs, tol_.ode_rel);
    const auto system = [this](const State& x, State& dxdt, double r) {
      dxdt[0] = x[1];
      dxdt[1] = -std::tanh(r) * x[1] - (lambda_ - ode_.potential(r)) * x[0];
      dxdt[2] = std::cosh(r) * x[0] * x[0];
    };
    State x{st.phi, st.dphi, st.mass};
    double r = st.r;
    const double dir = target >= r ? 1.0 : -1.0;
    long steps = 0;
    while (dir * (target - r) > 0.0) {
      const double remaining = std::abs(target - r);
      const bool clipped = dt >= remaining;
      double step = dir * (clipped ? remaining : dt);
      const double before = r;
      const auto result = stepper.try_step(system, x, r, step);
      if (result == odeint::success) {
        dt = clipped ? std::max(dt, std::abs(step)) : std::abs(step);
        if (clipped) r = target;  // land exactly on the grid point
        rescale(x, st.log_scale);
      } else {
        dt = std::abs(step);
        r = before;
      }
      if (!std::isfinite(x[0]) || !std::isfinite(x[1]) || !std::isfinite(x[2]))
        throw IntegrationError("mode solver: non-finite state", r);
      if (dt < 1e-13 * std::max(1.0, std::abs(r)))
        throw IntegrationError("mode solver: step size collapsed", r);
      if (++steps > kMaxSteps) throw IntegrationError("mode solver: step budget exhausted", r);
    }
    st.r = target;
    st.phi = x[0];
    st.dphi = x[1];
    st.mass = x[2];
  }

 private:
  static void rescale(State& x, double& log_scale) {
    const double big = std::max(std::abs(x[0]), std::abs(x[1]));
    double f = 1.0;
    if (big > kRescaleValue) f = big;
    if (std::abs(x[2]) / (f * f) > kRescaleMass) f = std::sqrt(std::abs(x[2]));
    if (f == 1.0) return;
    x[0] /= f;
    x[1] /= f;
    x[2] /= f * f;
    log_scale += std::log(f);
  }

  const ModeODE& ode_;
  double lambda_;
  Tolerances tol_;
};

ModeState initial_state(ModeKind kind) {
  ModeState st;
  st.phi = kind == ModeKind::s ? 0.0 : 1.0;
  st.dphi = kind == ModeKind::s ? 1.0 : 0.0;
  return st;
}

// Brings `st` onto the log scale `target_scale`.
ModeState on_scale(ModeState st, double target_scale) {
  const double f = std::exp(st.log_scale - target_scale);
  st.phi *= f;
  st.dphi *= f;
  st.mass *= f * f;
  st.log_scale = target_scale;
  return st;
}

}  // namespace

double ModeODE::potential(double r) const {
  if (j == 0) return 0.0;
  const double q = j / (geom.l() * std::cosh(r));
  return q * q;
}

double ModeODE::transformed_coeff(double r) const {
  const double sech = 1.0 / std::cosh(r);
  return (0.25 - param.lambda()) + 0.25 * sech * sech + potential(r);
}

void ModeODE::validate() const {
  if (j < 0) throw DomainError("mode equation: j must be nonnegative");
  if (geom.l_gamma() > 1.0) throw DomainError("mode equation: requires l_gamma <= 1");
}

const char* to_string(ModeKind kind) noexcept { return kind == ModeKind::s ? "s" : "c"; }

ModeSolution::ModeSolution(ModeODE ode, ModeKind kind, std::vector<ModeState> samples,
                           SolveOptions options)
    : ode_(std::move(ode)),
      kind_(kind),
      samples_(std::move(samples)),
      options_(options),
      half_width_(ode_.geom.unit_radius()) {}

ModeState ModeSolution::origin() const noexcept { return initial_state(kind_); }

std::vector<ModeState> ModeSolution::trajectory(std::vector<double> points) const {
  if (points.empty()) return {};
  const bool positive = points.front() >= 0.0;
  for (double p : points) {
    if ((p >= 0.0) != positive && p != 0.0)
      throw DomainError("mode trajectory: points must lie on one side of 0");
    // The equation extends smoothly past L_1; difference stencils at the
    // collar boundary need a little room.
    if (std::abs(p) > half_width_ + kStencilMargin)
      throw DomainError("mode trajectory: point outside the collar");
  }
  std::sort(points.begin(), points.end(),
            [](double a, double b) { return std::abs(a) < std::abs(b); });
  // Start from the stored sample nearest to 0 that is not beyond the first point.
  ModeState st = origin();
  for (const ModeState& s : samples_) {
    const bool same_side = positive ? s.r > 0.0 : s.r < 0.0;
    if (same_side && std::abs(s.r) <= std::abs(points.front()) && std::abs(s.r) > std::abs(st.r))
      st = s;
  }
  const Integrator integ(ode_, options_.tol);
  double dt = integ.initial_step(st.r);
  std::vector<ModeState> out;
  out.reserve(points.size());
  for (double p : points) {
    integ.advance(st, p, dt);
    out.push_back(st);
  }
  const double scale = out.front().log_scale;
  for (ModeState& s : out) s = on_scale(s, scale);
  return out;
}

ModeState ModeSolution::state_at(double r) const { return trajectory({r}).front(); }

std::vector<double> ModeSolution::residuals() const {
  const double lambda = ode_.param.lambda();
  std::vector<double> out;
  out.reserve(samples_.size());
  for (const ModeState& s : samples_) {
    const double r = s.r;
    double h = std::min(1e-3, 0.01 / std::sqrt(1.0 + ode_.potential(r)));
    h = std::min(h, std::abs(r) / 4.0);
    const double sg = r > 0.0 ? 1.0 : -1.0;
    const auto st = trajectory({r - 2 * sg * h, r - sg * h, r, r + sg * h, r + 2 * sg * h});
    // Reorder to ascending r for the stencil.
    double d[5];
    for (int k = 0; k < 5; ++k) d[sg > 0 ? k : 4 - k] = st[k].dphi;
    const ModeState& c = st[2];
    const double phi2 = (-d[4] + 8.0 * d[3] - 8.0 * d[1] + d[0]) / (12.0 * h);
    const double t1 = std::tanh(r) * c.dphi;
    const double t2 = (lambda - ode_.potential(r)) * c.phi;
    const double scale = std::abs(phi2) + std::abs(t1) + std::abs(t2);
    const double res = std::abs(phi2 + t1 + t2);
    out.push_back(scale > 0.0 ? res / scale : 0.0);
  }
  return out;
}

double ModeSolution::max_residual() const {
  const auto r = residuals();
  return r.empty() ? 0.0 : *std::max_element(r.begin(), r.end());
}

std::vector<double> ModeSolution::transform_residuals() const {
  std::vector<double> out;
  out.reserve(samples_.size());
  for (const ModeState& s : samples_) {
    const double r = s.r;
    double h = std::min(1e-3, 1e-3 / std::sqrt(1.0 + ode_.potential(r)));
    h = std::min(h, std::abs(r) / 2.0);
    const auto st = trajectory({r - h, r, r + h});
    const auto u = [](const ModeState& m) { return std::sqrt(std::cosh(m.r)) * m.phi; };
    const double second = (u(st[0]) - 2.0 * u(st[1]) + u(st[2])) / (h * h);
    const double rhs = ode_.transformed_coeff(r) * u(st[1]);
    const double scale = std::max(std::abs(rhs), std::abs(second));
    out.push_back(scale > 0.0 ? std::abs(second - rhs) / scale : 0.0);
  }
  return out;
}

double ModeSolution::parity_defect() const {
  const double sign = kind_ == ModeKind::s ? -1.0 : 1.0;
  double worst = 0.0;
  const std::size_t n = samples_.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    const ModeState& neg = samples_[i];
    const ModeState pos = on_scale(samples_[n - 1 - i], neg.log_scale);
    const double denom = std::max(std::abs(neg.phi), std::abs(pos.phi));
    if (denom == 0.0) continue;
    worst = std::max(worst, std::abs(neg.phi - sign * pos.phi) / denom);
  }
  return worst;
}

double ModeSolution::value(std::size_t i) const {
  const ModeState& s = samples_.at(i);
  return s.phi * std::exp(s.log_scale);
}

ModeSolution solve_mode(const ModeODE& ode, ModeKind kind, const SolveOptions& options) {
  ode.validate();
  if (options.grid_points < 4 || options.grid_points % 2 != 0)
    throw DomainError("mode solver: grid_points must be even and at least 4");
  const double L1 = ode.geom.unit_radius();
  const int n = options.grid_points;
  std::vector<ModeState> samples(static_cast<std::size_t>(n));
  const Integrator integ(ode, options.tol);
  for (int side = 0; side < 2; ++side) {
    ModeState st = initial_state(kind);
    double dt = integ.initial_step(0.0);
    // Outward from the centre: indices n/2 .. n-1 on the right, n/2-1 .. 0 on the left.
    for (int k = 0; k < n / 2; ++k) {
      const int i = side == 0 ? n / 2 + k : n / 2 - 1 - k;
      const double r = L1 * static_cast<double>(2 * i - (n - 1)) / static_cast<double>(n - 1);
      integ.advance(st, r, dt);
      samples[static_cast<std::size_t>(i)] = st;
    }
  }
  return {ode, kind, std::move(samples), options};
}

}  // namespace hypmass
