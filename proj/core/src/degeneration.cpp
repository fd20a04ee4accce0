#include "hypmass/degeneration.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "hypmass/error.hpp"

namespace hypmass {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

PinchFamily PinchFamily::from_schedule(const std::vector<double>& l_gammas,
                                       const std::vector<double>& lambdas) {
  if (l_gammas.size() != lambdas.size())
    throw DomainError("pinch family: schedule and eigenvalue lists differ in length");
  PinchFamily f;
  for (std::size_t i = 0; i < l_gammas.size(); ++i) f.members.push_back({l_gammas[i], lambdas[i], {}});
  f.validate();
  return f;
}

void PinchFamily::validate() const {
  if (members.empty()) throw DomainError("pinch family: empty schedule");
  for (std::size_t i = 0; i < members.size(); ++i) {
    const PinchMember& m = members[i];
    if (!(m.l_gamma > 0.0) || !std::isfinite(m.l_gamma))
      throw DomainError("pinch family: l_gamma must be positive");
    if (i > 0 && !(m.l_gamma < members[i - 1].l_gamma))
      throw DomainError("pinch family: l_gamma schedule must be strictly decreasing");
    if (!(m.lambda > 0.0) || m.lambda > 0.25)
      throw DomainError("pinch family: lambda must lie in (0, 1/4]");
  }
}

bool SweepTable::decreasing_along_schedule() const {
  std::map<double, std::vector<const SweepRow*>> by_r;
  for (const SweepRow& row : rows) by_r[row.r].push_back(&row);
  for (const auto& [r, list] : by_r) {
    for (std::size_t i = 1; i < list.size(); ++i) {
      const double prev = list[i - 1]->error;
      const double cur = list[i]->error;
      if (prev == 0.0 ? cur != 0.0 : !(cur < prev)) return false;
    }
  }
  return true;
}

SweepTable metric_convergence_sweep(const PinchFamily& family, const std::vector<double>& r_grid) {
  family.validate();
  SweepTable out;
  for (const PinchMember& m : family.members) {
    const CollarGeometry geom(m.l_gamma);
    const double rho = keen_halfwidth(m.l_gamma);
    for (double r : r_grid) {
      if (r > rho) throw DomainError("metric sweep: r beyond the core geodesic of a member");
      SweepRow row;
      row.l_gamma = m.l_gamma;
      row.r = r;
      row.value = shifted_collar_coeff(geom, r);
      row.limit = degenerate_limit_coeff(r);
      row.error = std::abs(shifted_collar_defect(geom, r));
      out.rows.push_back(row);
    }
  }
  return out;
}

double shifted_potential(double l_gamma, int j, double r_shifted) {
  if (j == 0) return 0.0;
  const double l = l_gamma / (2.0 * kPi);
  const double q = j / (l * std::cosh(r_shifted - keen_halfwidth(l_gamma)));
  return q * q;
}

double limit_potential(int j, double r_shifted) {
  return static_cast<double>(j) * j * kPi * kPi * std::exp(2.0 * r_shifted);
}

SweepTable potential_convergence_sweep(const PinchFamily& family, int j,
                                       const std::vector<double>& r_grid) {
  family.validate();
  if (j < 0) throw DomainError("potential sweep: j must be nonnegative");
  SweepTable out;
  for (const PinchMember& m : family.members) {
    const double rho = keen_halfwidth(m.l_gamma);
    for (double r : r_grid) {
      if (r > rho) throw DomainError("potential sweep: r beyond the core geodesic of a member");
      SweepRow row;
      row.l_gamma = m.l_gamma;
      row.r = r;
      row.value = shifted_potential(m.l_gamma, j, r);
      row.limit = limit_potential(j, r);
      row.error = row.limit == 0.0 ? std::abs(row.value) : std::abs(row.value / row.limit - 1.0);
      out.rows.push_back(row);
    }
  }
  return out;
}

const char* to_string(DichotomyCase c) noexcept {
  return c == DichotomyCase::case1 ? "case1" : "case2";
}

DichotomyReport classify_dichotomy(const DichotomyInput& input, const DichotomyOptions& options) {
  if (input.eps_grid.empty() || input.members.empty())
    throw DomainError("dichotomy: empty eps grid or schedule");
  if (!(options.tail_fraction > 0.0) || options.tail_fraction > 1.0)
    throw DomainError("dichotomy: tail fraction must lie in (0, 1]");
  if (!(options.delta > 0.0)) throw DomainError("dichotomy: delta must be positive");
  for (const DichotomyMember& m : input.members) {
    if (m.thick_mass_sq.size() != input.eps_grid.size())
      throw DomainError("dichotomy: member mass list does not match the eps grid");
    for (double v : m.thick_mass_sq)
      if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("dichotomy: invalid mass");
  }

  DichotomyReport report;
  const std::size_t n = input.members.size();
  const auto tail = static_cast<std::size_t>(
      std::max(1.0, std::ceil(options.tail_fraction * static_cast<double>(n))));
  for (std::size_t e = 0; e < input.eps_grid.size(); ++e) {
    double best = 0.0;
    for (std::size_t m = n - std::min(tail, n); m < n; ++m)
      best = std::max(best, input.members[m].thick_mass_sq[e]);
    report.tail_max.push_back(best);
    if (!report.witness_eps && best >= options.delta) {
      report.kind = DichotomyCase::case1;
      report.witness_eps = input.eps_grid[e];
      report.witness_delta = best;
    }
  }
  if (report.kind == DichotomyCase::case1) return report;

  const auto smallest = static_cast<std::size_t>(
      std::min_element(input.eps_grid.begin(), input.eps_grid.end()) - input.eps_grid.begin());
  for (const DichotomyMember& m : input.members) {
    const double mass = m.thick_mass_sq[smallest];
    report.renormalizers.push_back(mass > 0.0 ? 1.0 / std::sqrt(mass)
                                              : std::numeric_limits<double>::infinity());
  }
  report.renormalizers_nondecreasing =
      std::is_sorted(report.renormalizers.begin(), report.renormalizers.end());
  report.divergence_bound = options.divergence_bound.value_or(1.0 / std::sqrt(options.delta));
  report.renormalizers_diverging =
      report.renormalizers_nondecreasing && report.renormalizers.back() > report.divergence_bound;
  return report;
}

DichotomyInput synthesize_collar_family(const PinchFamily& family,
                                        const std::vector<double>& eps_grid,
                                        const CollarFamilyOptions& options) {
  family.validate();
  if (eps_grid.empty()) throw DomainError("collar family: empty eps grid");
  DichotomyInput out;
  out.eps_grid = eps_grid;
  for (const PinchMember& m : family.members) {
    const CollarGeometry geom(m.l_gamma);
    for (double eps : eps_grid)
      if (!(eps > m.l_gamma) || !(eps < 1.0))
        throw DomainError("collar family: every eps must lie in (l_gamma, 1)");
    const ModeSolution sol =
        solve_mode(ModeODE{geom, SpectralParam::from_lambda(m.lambda), 0}, options.kind,
                   options.solve);
    const MassProfile total = mode_mass(sol, m.l_gamma, 1.0);
    DichotomyMember member{m.l_gamma, m.lambda, {}};
    for (double eps : eps_grid) {
      const MassProfile thick = mode_mass(sol, eps, 1.0);
      member.thick_mass_sq.push_back(std::exp(thick.log_mass_sq - total.log_mass_sq));
    }
    out.members.push_back(std::move(member));
  }
  return out;
}

AggregateReport aggregate_mass_bounds(const SurfaceModel& model, double eps) {
  AggregateReport report;
  report.eps = eps;
  for (const RegionBound& r : model.regions) {
    if (!r.constant) throw DomainError("aggregate bound: region '" + r.name + "' has no constant");
    if (!(*r.constant >= 0.0)) throw DomainError("aggregate bound: negative region constant");
    if (*r.constant >= report.combined_constant) {
      report.combined_constant = *r.constant;
      report.dominant_region = r.name;
    }
  }
  const double c2 = report.combined_constant * report.combined_constant;
  report.thick_mass_lower_bound = 1.0 / std::sqrt(1.0 + c2);
  if (model.thick_mass_sq) {
    if (!(*model.thick_mass_sq >= 0.0)) throw DomainError("aggregate bound: negative thick mass");
    report.thin_mass_sq_bound = c2 * *model.thick_mass_sq;
  }
  return report;
}

RegionBound cusp_region(std::string name, const cusp::CuspBoundReport& report, double eps) {
  for (const cusp::CuspBoundRow& row : report.rows)
    if (row.eps == eps) return {std::move(name), RegionKind::cusp, row.ratio};
  return {std::move(name), RegionKind::cusp, std::nullopt};
}

RegionBound collar_region(std::string name, const CollarLemmaReport& report) {
  if (!report.t0) return {std::move(name), RegionKind::collar, std::nullopt};
  return {std::move(name), RegionKind::collar, std::max(report.t1, *report.t0)};
}

}  // namespace hypmass
