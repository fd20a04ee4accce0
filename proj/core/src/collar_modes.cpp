#include "hypmass/collar_modes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypmass/error.hpp"

namespace hypmass {

namespace {

// a < b for signed values sign * e^{log_abs}.
bool signed_less(int sa, double la, int sb, double lb) {
  if (sa != sb) return sa < sb;
  if (sa == 0) return false;
  return sa > 0 ? la < lb : la > lb;
}

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

void check_thin_eps(const CollarGeometry& geom, double eps) {
  if (!(eps > geom.l_gamma())) throw DomainError("collar constant: eps must exceed l_gamma");
  if (!(eps < 1.0)) throw DomainError("collar constant: eps must be below 1");
}

double ratio_constant_unchecked(const CollarGeometry& geom, double eps, double delta) {
  const double a = 2.0 * delta * geom.boundary_radius(eps);
  const double b = 2.0 * delta * geom.unit_radius();
  if (b < 600.0) {
    const double num = std::sinh(a) + a;
    const double den = std::sinh(b) - std::sinh(a) + (b - a);
    return std::sqrt(num / den);
  }
  // Everything scaled by e^{-b}.
  const double eb = std::exp(-b);
  const double sa = 0.5 * (std::exp(a - b) - std::exp(-a - b));
  const double num = sa + a * eb;
  const double den = 0.5 * (1.0 - std::exp(-2.0 * b)) - sa + (b - a) * eb;
  return std::sqrt(num / den);
}

// Mass l_gamma int u^2 over a <= r <= b on one side (sign = +-1), in log form.
double side_log_mass(const ModeSolution& sol, double a, double b, double sign) {
  if (b <= a) return -std::numeric_limits<double>::infinity();
  std::vector<ModeState> st;
  double lo = 0.0;
  if (a > 0.0) {
    st = sol.trajectory({sign * a, sign * b});
    lo = st[0].mass;
  } else {
    st = sol.trajectory({sign * b});
  }
  const double diff = std::abs(st.back().mass - lo);
  if (diff == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(diff) + 2.0 * st.back().log_scale;
}

}  // namespace

double log_cosh(double x) noexcept {
  const double ax = std::abs(x);
  return ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2;
}

std::vector<USample> transform_u(const ModeSolution& sol) {
  const ModeODE& ode = sol.ode();
  const double lambda = ode.param.lambda();
  const auto convert = [&](const ModeState& s) {
    const double c = std::cosh(s.r);
    const double t = std::tanh(s.r);
    const double sech2 = 1.0 / (c * c);
    const double root = std::sqrt(c);
    const double phi2 = -t * s.dphi - (lambda - ode.potential(s.r)) * s.phi;
    USample u;
    u.r = s.r;
    u.value = root * s.phi;
    u.deriv = root * (s.dphi + 0.5 * t * s.phi);
    u.second = root * (phi2 + t * s.dphi + (0.25 * t * t + 0.5 * sech2) * s.phi);
    u.log_scale = s.log_scale;
    return u;
  };
  const auto& samples = sol.samples();
  std::vector<USample> out;
  out.reserve(samples.size() + 1);
  const std::size_t half = samples.size() / 2;
  for (std::size_t i = 0; i < half; ++i) out.push_back(convert(samples[i]));
  out.push_back(convert(sol.origin()));
  for (std::size_t i = half; i < samples.size(); ++i) out.push_back(convert(samples[i]));
  return out;
}

const char* to_string(MonotoneVerdict verdict) noexcept {
  switch (verdict) {
    case MonotoneVerdict::increasing: return "increasing";
    case MonotoneVerdict::not_increasing: return "not_increasing";
    case MonotoneVerdict::hypothesis_not_satisfied: return "hypothesis_not_satisfied";
    case MonotoneVerdict::precondition_failed: return "precondition_failed";
  }
  return "unknown";
}

double RatioSample::value() const { return sign * std::exp(log_abs); }

MonotoneReport monotone_ratio_check(const std::vector<USample>& samples, double delta) {
  MonotoneReport report;
  if (!(delta >= 0.0)) return report;
  std::vector<USample> half;
  for (const USample& s : samples)
    if (s.r >= 0.0) half.push_back(s);
  std::sort(half.begin(), half.end(), [](const auto& a, const auto& b) { return a.r < b.r; });
  if (half.empty() || half.front().r != 0.0 || half.front().deriv < 0.0) return report;

  for (const USample& s : half) {
    if (s.r > 0.0 && !(s.second > delta * delta * s.value)) {
      report.verdict = MonotoneVerdict::hypothesis_not_satisfied;
      report.first_failure_r = s.r;
      return report;
    }
  }
  for (const USample& s : half) {
    RatioSample rs;
    rs.r = s.r;
    rs.sign = sign_of(s.value);
    rs.log_abs = rs.sign == 0 ? -std::numeric_limits<double>::infinity()
                              : std::log(std::abs(s.value)) + s.log_scale - log_cosh(delta * s.r);
    report.ratio.push_back(rs);
  }
  report.verdict = MonotoneVerdict::increasing;
  for (std::size_t i = 1; i < report.ratio.size(); ++i) {
    const RatioSample& a = report.ratio[i - 1];
    const RatioSample& b = report.ratio[i];
    if (!signed_less(a.sign, a.log_abs, b.sign, b.log_abs)) {
      report.verdict = MonotoneVerdict::not_increasing;
      report.first_failure_r = b.r;
      break;
    }
  }
  return report;
}

double collar_ratio_constant(const CollarGeometry& geom, double eps, double delta) {
  check_thin_eps(geom, eps);
  if (!(delta > 0.0)) throw DomainError("collar constant: delta must be positive");
  return ratio_constant_unchecked(geom, eps, delta);
}

double t0_constant(const CollarGeometry& geom, double eps, double eta) {
  if (!(eta > 0.0)) throw DomainError("T0: eta must be positive");
  if (eps > geom.margulis()) throw DomainError("T0: eps must not exceed the Margulis constant");
  return collar_ratio_constant(geom, eps, std::sqrt(eta));
}

double t1_constant(const CollarGeometry& geom, double eps) {
  if (eps > geom.margulis()) throw DomainError("T1: eps must not exceed the Margulis constant");
  return collar_ratio_constant(geom, eps, 1.0);
}

double t2_constant(const CollarGeometry& geom, double eps, double eps0) {
  check_thin_eps(geom, eps);
  if (eps > eps0 || !(eps0 < 1.0)) throw DomainError("T2: requires eps <= eps0 < 1");
  const double le = geom.boundary_radius(eps);
  const double l0 = geom.boundary_radius(eps0);
  return std::sqrt((l0 - le) / (geom.unit_radius() - l0));
}

MassProfile mode_mass(const ModeSolution& sol, double t, double w) {
  const CollarGeometry& geom = sol.ode().geom;
  if (!(t >= geom.l_gamma()) || !(w >= t) || !(w <= 1.0))
    throw DomainError("mode mass: band must satisfy l_gamma <= t <= w <= 1");
  const double a = geom.boundary_radius(t);
  const double b = std::min(geom.boundary_radius(w), sol.half_width());
  const double pos = side_log_mass(sol, a, b, 1.0);
  const double neg = side_log_mass(sol, a, b, -1.0);
  const double total = log_add(pos, neg);
  return {"collar band", total + (std::isfinite(total) ? std::log(geom.l_gamma()) : 0.0)};
}

bool CollarLemmaReport::pass() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass(); });
}

CollarLemmaReport verify_collar_lemma(const CollarGeometry& geom, const SpectralParam& param,
                                      int j_max, double eps, std::optional<double> eta,
                                      const CollarLemmaOptions& options) {
  if (j_max < 0) throw DomainError("collar lemma: j_max must be nonnegative");
  if (!(eps > geom.l_gamma()) || eps > geom.margulis())
    throw DomainError("collar lemma: requires l_gamma < eps <= Margulis constant");
  const double eps0 = options.eps0.value_or(geom.margulis());
  if (eps > eps0 || !(eps0 < 1.0)) throw DomainError("collar lemma: requires eps <= eps0 < 1");
  if (eta) {
    if (!(*eta > 0.0)) throw DomainError("collar lemma: eta must be positive");
    // Equality is admissible: the 1/(4 cosh^2 r) term keeps u'' > eta u strict.
    if (!(param.lambda() <= 0.25 - *eta + 1e-12))
      throw DomainError("collar lemma: the eta inequality needs lambda <= 1/4 - eta");
  }

  CollarLemmaReport report;
  report.l_gamma = geom.l_gamma();
  report.lambda = param.lambda();
  report.eps = eps;
  report.eps0 = eps0;
  report.eta = eta;
  report.t1 = collar_ratio_constant(geom, eps, 1.0);
  report.t1_outer = collar_ratio_constant(geom, eps0, 1.0);
  report.t2 = t2_constant(geom, eps, eps0);
  if (eta) report.t0 = collar_ratio_constant(geom, eps, std::sqrt(*eta));
  const double combined = std::max(report.t1_outer, report.t2);

  for (int j = 0; j <= j_max; ++j) {
    for (ModeKind kind : {ModeKind::s, ModeKind::c}) {
      const ModeSolution sol = solve_mode(ModeODE{geom, param, j}, kind, options.solve);
      const MassProfile thin = mode_mass(sol, geom.l_gamma(), eps);
      const MassProfile outer = mode_mass(sol, eps, 1.0);
      const MassProfile middle = mode_mass(sol, eps, eps0);
      const MassProfile far = mode_mass(sol, eps0, 1.0);
      if (j >= 1)
        report.rows.push_back({j, kind, "thin collar vs outer collar (mode j >= 1)",
                               norm_ratio(thin, outer), report.t1});
      if (j == 0)
        report.rows.push_back({j, kind, "middle band vs outer band (mode 0)",
                               norm_ratio(middle, far), report.t2});
      report.rows.push_back({j, kind, "middle band vs outer band (all modes)",
                             norm_ratio(middle, far), combined});
      if (j == 0 && report.t0)
        report.rows.push_back({j, kind, "thin collar vs outer collar (mode 0, eta gap)",
                               norm_ratio(thin, outer), *report.t0});
    }
  }
  return report;
}

}  // namespace hypmass
