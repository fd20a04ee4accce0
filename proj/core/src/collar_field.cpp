#include "hypmass/collar_field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "hypmass/error.hpp"

namespace hypmass {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Composite Simpson on a uniform grid; the last three intervals use the 3/8 rule
// when the interval count is odd.
double simpson(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * h * (f[0] + f[1]);
  if (n == 3) return h / 3.0 * (f[0] + 4.0 * f[1] + f[2]);
  std::size_t intervals = n - 1;
  double total = 0.0;
  std::size_t end = intervals;
  if (intervals % 2 == 1) {
    end = intervals - 3;
    total += 3.0 * h / 8.0 * (f[end] + 3.0 * f[end + 1] + 3.0 * f[end + 2] + f[end + 3]);
  }
  for (std::size_t i = 0; i + 2 <= end; i += 2)
    total += h / 3.0 * (f[i] + 4.0 * f[i + 1] + f[i + 2]);
  return total;
}

}  // namespace

CollarField::CollarField(CollarGeometry geom, SpectralParam param,
                         std::vector<FieldCoefficients> coeffs, FieldOptions options)
    : geom_(geom), param_(param), options_(options) {
  if (options_.theta_points < 4) throw DomainError("collar field: theta_points must be at least 4");
  std::map<int, FieldCoefficients> merged;
  merged[0] = FieldCoefficients{};
  for (const FieldCoefficients& c : coeffs) {
    if (c.j < 0) throw DomainError("collar field: negative mode index");
    FieldCoefficients& m = merged[c.j];
    m.j = c.j;
    m.a += c.a;
    m.b += c.b;
    m.a_prime += c.a_prime;
    m.b_prime += c.b_prime;
  }
  for (auto& [j, c] : merged) {
    if (j == 0) c.a_prime = c.b_prime = 0.0;
    coeffs_.push_back(c);
  }

  SolveOptions solve{options_.r_points, options_.tol};
  for (const FieldCoefficients& c : coeffs_) {
    for (ModeKind kind : {ModeKind::s, ModeKind::c}) {
      ModeSolution sol = solve_mode(ModeODE{geom_, param_, c.j}, kind, solve);
      double log_norm = 0.0;
      double sign = 1.0;
      if (options_.normalization == GeneratorNormalization::boundary) {
        const ModeState& end = sol.samples().back();
        if (end.phi == 0.0) throw DomainError("collar field: generator vanishes on the boundary");
        log_norm = std::log(std::abs(end.phi)) + end.log_scale;
        sign = end.phi > 0.0 ? 1.0 : -1.0;
      }
      Generator g{std::move(sol), log_norm, sign};
      (kind == ModeKind::s ? s_gen_ : c_gen_).push_back(std::move(g));
    }
  }

  const auto& samples = s_gen_.front().solution.samples();
  r_.reserve(samples.size());
  for (const ModeState& s : samples) r_.push_back(s.r);
  theta_.resize(static_cast<std::size_t>(options_.theta_points));
  for (std::size_t k = 0; k < theta_.size(); ++k)
    theta_[k] = kTwoPi * static_cast<double>(k) / static_cast<double>(theta_.size());

  coeff_a_.assign(coeffs_.size(), std::vector<double>(r_.size(), 0.0));
  coeff_b_.assign(coeffs_.size(), std::vector<double>(r_.size(), 0.0));
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    const FieldCoefficients& c = coeffs_[e];
    for (std::size_t i = 0; i < r_.size(); ++i) {
      const double s = generator_value(s_gen_[e], s_gen_[e].solution.samples()[i]);
      const double cc = generator_value(c_gen_[e], c_gen_[e].solution.samples()[i]);
      coeff_a_[e][i] = c.a * s + c.b * cc;
      coeff_b_[e][i] = c.a_prime * s + c.b_prime * cc;
    }
  }

  values_.assign(r_.size() * theta_.size(), 0.0);
  first_values_.assign(r_.size() * theta_.size(), 0.0);
  for (std::size_t i = 0; i < r_.size(); ++i) {
    for (std::size_t k = 0; k < theta_.size(); ++k) {
      double v = 0.0;
      for (std::size_t e = 1; e < coeffs_.size(); ++e) {
        const int j = coeffs_[e].j;
        v += coeff_a_[e][i] * std::cos(j * theta_[k]) + coeff_b_[e][i] * std::sin(j * theta_[k]);
      }
      first_values_[i * theta_.size() + k] = v;
      values_[i * theta_.size() + k] = coeff_a_[0][i] + v;
    }
  }
}

double CollarField::generator_value(const Generator& g, const ModeState& st) const {
  if (st.phi == 0.0) return 0.0;
  return g.sign * st.phi * std::exp(st.log_scale - g.log_norm);
}

std::vector<double> CollarField::boundary_trace(int side) const {
  const std::size_t i = side > 0 ? r_.size() - 1 : 0;
  std::vector<double> out(theta_.size());
  for (std::size_t k = 0; k < theta_.size(); ++k) out[k] = value(i, k);
  return out;
}

double CollarField::boundary_sup() const {
  double sup = 0.0;
  for (int side : {-1, 1})
    for (double v : boundary_trace(side)) sup = std::max(sup, std::abs(v));
  return sup;
}

CollarField::Coefficients CollarField::coefficients_at(double r) const {
  Coefficients out;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    const FieldCoefficients& c = coeffs_[e];
    const double s = generator_value(s_gen_[e], s_gen_[e].solution.state_at(r));
    const double cc = generator_value(c_gen_[e], c_gen_[e].solution.state_at(r));
    out.j.push_back(c.j);
    out.a.push_back(c.a * s + c.b * cc);
    out.b.push_back(c.a_prime * s + c.b_prime * cc);
  }
  return out;
}

std::vector<double> CollarField::trace_at(double r) const {
  const Coefficients c = coefficients_at(r);
  std::vector<double> out(theta_.size(), 0.0);
  for (std::size_t k = 0; k < theta_.size(); ++k)
    for (std::size_t e = 0; e < c.j.size(); ++e)
      out[k] += c.a[e] * std::cos(c.j[e] * theta_[k]) + c.b[e] * std::sin(c.j[e] * theta_[k]);
  return out;
}

std::vector<double> CollarField::first_mode_trace_at(double r) const {
  const Coefficients c = coefficients_at(r);
  std::vector<double> out(theta_.size(), 0.0);
  for (std::size_t k = 0; k < theta_.size(); ++k)
    for (std::size_t e = 1; e < c.j.size(); ++e)
      out[k] += c.a[e] * std::cos(c.j[e] * theta_[k]) + c.b[e] * std::sin(c.j[e] * theta_[k]);
  return out;
}

double CollarField::extract_fourier(std::size_t i, int j, bool sine) const {
  if (j < 0) throw DomainError("Fourier extraction: negative mode index");
  double sum = 0.0;
  for (std::size_t k = 0; k < theta_.size(); ++k) {
    const double w = sine ? std::sin(j * theta_[k]) : std::cos(j * theta_[k]);
    sum += value(i, k) * w;
  }
  const double dtheta = kTwoPi / static_cast<double>(theta_.size());
  return sum * dtheta / (j == 0 ? kTwoPi : std::numbers::pi);
}

MassProfile CollarField::parseval_mass() const {
  // int_{-L1}^{L1} generator^2 cosh r dr from the solver's cumulative mass.
  const auto log_generator_mass = [](const Generator& g) {
    const ModeState& lo = g.solution.samples().front();
    const ModeState& hi = g.solution.samples().back();
    double total = -std::numeric_limits<double>::infinity();
    for (const ModeState* s : {&lo, &hi})
      if (s->mass != 0.0)
        total = log_add(total, std::log(std::abs(s->mass)) + 2.0 * s->log_scale);
    return total - 2.0 * g.log_norm;
  };
  double total = -std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    const FieldCoefficients& c = coeffs_[e];
    const double ls = log_generator_mass(s_gen_[e]);
    const double lc = log_generator_mass(c_gen_[e]);
    const double weight = std::log(c.j == 0 ? geom_.l_gamma() : 0.5 * geom_.l_gamma());
    for (const auto& [coef, lm] : {std::pair{c.a, ls}, std::pair{c.b, lc},
                                   std::pair{c.a_prime, ls}, std::pair{c.b_prime, lc}}) {
      if (coef == 0.0) continue;
      total = log_add(total, weight + 2.0 * std::log(std::abs(coef)) + lm);
    }
  }
  return {"collar C^1", total};
}

MassProfile CollarField::grid_mass() const {
  const double dtheta = kTwoPi / static_cast<double>(theta_.size());
  std::vector<double> radial(r_.size());
  for (std::size_t i = 0; i < r_.size(); ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < theta_.size(); ++k) s += value(i, k) * value(i, k);
    radial[i] = s * dtheta * geom_.l() * std::cosh(r_[i]);
  }
  const double h = (r_.back() - r_.front()) / static_cast<double>(r_.size() - 1);
  return MassProfile::from_mass_sq("collar C^1", simpson(radial, h));
}

void CollarField::write_grid(std::ostream& out, Component component) const {
  std::ostringstream line;
  line.precision(17);
  out << "# r theta value\n";
  for (std::size_t i = 0; i < r_.size(); ++i) {
    for (std::size_t k = 0; k < theta_.size(); ++k) {
      double v = value(i, k);
      if (component == Component::zero_mode) v = zero_mode(i);
      if (component == Component::first_mode) v = first_mode(i, k);
      line.str("");
      line << r_[i] << ' ' << theta_[k] << ' ' << v << '\n';
      out << line.str();
    }
  }
}

CollarField CollarField::scaled(double factor) const {
  CollarField out = *this;
  for (FieldCoefficients& c : out.coeffs_) {
    c.a *= factor;
    c.b *= factor;
    c.a_prime *= factor;
    c.b_prime *= factor;
  }
  for (auto* grid : {&out.coeff_a_, &out.coeff_b_})
    for (auto& row : *grid)
      for (double& v : row) v *= factor;
  for (double& v : out.values_) v *= factor;
  for (double& v : out.first_values_) v *= factor;
  return out;
}

CollarField synthesize_field(const CollarGeometry& geom, const SpectralParam& param,
                             const std::vector<FieldCoefficients>& coeffs,
                             const FieldOptions& options) {
  return {geom, param, coeffs, options};
}

double tail_profile(int j, double r) {
  return std::exp(log_cosh(j * r) - 0.5 * log_cosh(r));
}

double tail_series(const CollarGeometry& geom, double r) {
  const double L1 = geom.unit_radius();
  if (!(std::abs(r) < L1)) throw DomainError("tail series: requires |r| < L_1");
  const double base = -0.5 * log_cosh(r) + 0.5 * log_cosh(L1);
  double sum = 0.0;
  for (int j = 1; j < 10'000'000; ++j) {
    const double term = std::exp(base + log_cosh(j * r) - log_cosh(j * L1));
    sum += term;
    if (term < 1e-17 * sum) return sum;
  }
  throw DomainError("tail series: no convergence");
}

double geometric_tail_sum(double eps) {
  if (!(eps > 0.0) || !(eps < 1.0)) throw DomainError("geometric sum: eps must lie in (0, 1)");
  const double lead = 1.0 / std::sqrt(eps);
  double sum = 0.0;
  double power = eps;
  while (power * lead > 1e-18 * sum || sum == 0.0) {
    sum += power * lead;
    power *= eps;
  }
  return sum;
}

TailBoundReport tail_bound_check(const CollarField& field, double eps, double t_boundary) {
  const CollarGeometry& geom = field.geometry();
  if (!(t_boundary > 0.0)) throw DomainError("tail bound: t must be positive");
  if (!(eps > geom.l_gamma()) || !(eps < 1.0))
    throw DomainError("tail bound: eps must lie in (l_gamma, 1)");
  TailBoundReport report;
  report.eps = eps;
  report.t_boundary = t_boundary;
  report.boundary_sup = field.boundary_sup();
  if (report.boundary_sup > 0.25 * t_boundary * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "tail bound: boundary sup " << report.boundary_sup << " exceeds t/4 = "
        << 0.25 * t_boundary;
    throw DomainError(msg.str());
  }
  const double le = geom.boundary_radius(eps);
  const auto& r = field.r_grid();
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (std::abs(r[i]) > le) continue;
    for (std::size_t k = 0; k < field.theta_points(); ++k)
      report.sup_first_mode = std::max(report.sup_first_mode, std::abs(field.first_mode(i, k)));
    report.series_max = std::max(report.series_max, tail_series(geom, r[i]));
  }
  for (double edge : {-le, le}) {
    for (double v : field.first_mode_trace_at(edge))
      report.sup_first_mode = std::max(report.sup_first_mode, std::abs(v));
    report.series_max = std::max(report.series_max, tail_series(geom, edge));
  }
  const double geometric = std::sqrt(eps) / (1.0 - eps);
  report.k_prime = report.series_max / geometric;
  report.bound = 2.0 * t_boundary * report.k_prime * geometric;
  return report;
}

}  // namespace hypmass
