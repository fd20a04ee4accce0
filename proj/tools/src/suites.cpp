#include "hypmass_cli/suites.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "hypmass/collar_field.hpp"
#include "hypmass/collar_modes.hpp"
#include "hypmass/cusp_mass.hpp"
#include "hypmass/degeneration.hpp"
#include "hypmass/error.hpp"
#include "hypmass/geometry.hpp"
#include "hypmass/nodal.hpp"

namespace hypmass::cli {

namespace {

using report::full;
constexpr double kPi = std::numbers::pi;

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::vector<double> cusp_b_values(const RunConfig& c) {
  if (!c.cusp_b.empty()) return c.cusp_b;
  return {4 * kPi, 8 * kPi, 16 * kPi, 32 * kPi};
}

std::vector<FieldCoefficients> tail_coefficients(const RunConfig& c) {
  if (!c.members.empty() && !c.members.front().coefficients.empty())
    return c.members.front().coefficients;
  std::vector<FieldCoefficients> out{{0, 0.0, 1.0, 0.0, 0.0}};
  for (int j = 1; j <= c.tail_j_max; ++j)
    out.push_back({j, 1.0 / (j + 1), 1.0, -0.5 / (j + 1), 0.3});
  return out;
}

nlohmann::json cell(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec == std::errc() && res.ptr == s.data() + s.size() && std::isfinite(v)) return v;
  if (s == "true") return true;
  if (s == "false") return false;
  return s;
}

nlohmann::json table_json(const report::CsvTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows()) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns()[i]] = cell(row[i]);
    rows.push_back(std::move(obj));
  }
  return {{"schema", t.schema()}, {"columns", t.columns()}, {"rows", std::move(rows)}};
}

}  // namespace

SuiteResult run_cusp(const RunConfig& c) {
  SuiteResult out{"cusp", {}, {}, {}};
  const auto b_values = cusp_b_values(c);

  const auto sweep = cusp::sweep_k_hat(b_values, c.cusp_n_max, c.cusp_s, c.tol);
  report::CsvTable khat("hypmass.cusp.k_hat.v1", {"b", "k_hat"});
  for (const auto& [b, k] : sweep.k_hat) khat.add_row({full(b), full(k)});
  report::CsvTable tail("hypmass.cusp.tail_ratio.v1", {"b", "n", "s", "log_ratio", "ratio"});
  for (const auto& r : sweep.rows)
    tail.add_row({full(r.b), std::to_string(r.n), full(r.s), full(r.log_ratio), full(r.ratio())});
  if (!sweep.strictly_decreasing())
    out.failures.push_back("cusp: tail ratio sup K(b) strictly decreasing in b");
  if (sweep.k_hat.size() >= 2 &&
      !(sweep.k_hat.back().second < 0.1 * sweep.k_hat.front().second))
    out.failures.push_back("cusp: K(b_max) < 0.1 K(b_min): measured " +
                           full(sweep.k_hat.back().second) + " vs " +
                           full(0.1 * sweep.k_hat.front().second));

  report::CsvTable residual("hypmass.cusp.residual_identity.v1",
                            {"s", "b", "closed_form", "quadrature", "rel_diff"});
  for (double s : c.residual_s) {
    for (double b : b_values) {
      const double closed = cusp::residual_tail_ratio_sq(s, b);
      const double quad = cusp::residual_tail_ratio_sq_quadrature(s, b, c.tol);
      const double rel = std::abs(quad - closed) / std::abs(closed);
      residual.add_row({full(s), full(b), full(closed), full(quad), full(rel)});
      if (!(rel < 1e-10))
        out.failures.push_back("cusp: residual tail ratio closed form = quadrature at s=" +
                               full(s) + " b=" + full(b) + ": rel diff " + full(rel));
    }
  }

  report::CsvTable bound("hypmass.cusp.mass_bound.v1", {"function", "eps", "b", "ratio"});
  const std::vector<double> eps_grid{0.5, 0.25, 0.1, 0.05};
  CuspModeCoeffs cuspidal{SpectralParam::from_s(0.75), {{1, 1.0}, {2, 0.5}, {3, -0.25}}, {}};
  CuspModeCoeffs residual_fn{SpectralParam::from_s(0.3), {{1, 1.0}, {2, 0.5}}, 1.0};
  for (const auto& [name, coeffs] :
       {std::pair{"cuspidal", cuspidal}, std::pair{"residual", residual_fn}}) {
    const auto rep = cusp::cusp_mass_bound_check(coeffs, eps_grid, c.tol);
    for (const auto& r : rep.rows) bound.add_row({name, full(r.eps), full(r.b), full(r.ratio)});
    if (!rep.decreasing_as_eps_shrinks())
      out.failures.push_back(std::string("cusp: thin/band mass ratio decreasing as eps shrinks (") +
                             name + " function)");
  }

  out.notes.push_back("K(b) over " + std::to_string(sweep.k_hat.size()) + " heights, strictly decreasing: " +
                      yes_no(sweep.strictly_decreasing()));
  out.tables.push_back({"k_hat", std::move(khat)});
  out.tables.push_back({"tail_ratio", std::move(tail)});
  out.tables.push_back({"residual_identity", std::move(residual)});
  out.tables.push_back({"mass_bound", std::move(bound)});
  return out;
}

SuiteResult run_collar(const RunConfig& c) {
  SuiteResult out{"collar", {}, {}, {}};
  const CollarGeometry geom(c.l_gamma);
  CollarLemmaOptions opts;
  opts.eps0 = c.eps0;
  opts.solve = {c.grid_points, c.tol};
  const auto rep = verify_collar_lemma(geom, SpectralParam::from_lambda(c.lambda), c.j_max, c.eps,
                                       c.eta, opts);
  report::CsvTable rows("hypmass.collar.lemma.v1",
                        {"j", "kind", "inequality", "measured", "constant", "pass"});
  for (const auto& r : rep.rows) {
    rows.add_row({std::to_string(r.j), to_string(r.kind), r.inequality, full(r.measured),
                  full(r.constant), yes_no(r.pass())});
    if (!r.pass())
      out.failures.push_back("collar: " + r.inequality + " (j=" + std::to_string(r.j) + ", " +
                             to_string(r.kind) + "): measured " + full(r.measured) +
                             " > constant " + full(r.constant));
  }
  report::CsvTable consts("hypmass.collar.constants.v1",
                          {"l_gamma", "lambda", "eps", "eps0", "eta", "t0", "t1", "t1_outer", "t2"});
  consts.add_row({full(rep.l_gamma), full(rep.lambda), full(rep.eps), full(rep.eps0),
                  rep.eta ? full(*rep.eta) : "", rep.t0 ? full(*rep.t0) : "", full(rep.t1),
                  full(rep.t1_outer), full(rep.t2)});
  out.notes.push_back(std::to_string(rep.rows.size()) + " collar ratios checked at l_gamma=" +
                      report::human(rep.l_gamma) + ", lambda=" + report::human(rep.lambda));
  out.tables.push_back({"lemma", std::move(rows)});
  out.tables.push_back({"constants", std::move(consts)});
  return out;
}

SuiteResult run_tail(const RunConfig& c) {
  SuiteResult out{"tail", {}, {}, {}};
  report::CsvTable rows("hypmass.tail.bound.v1",
                        {"l_gamma", "eps", "boundary_sup", "sup_first_mode", "k_prime", "bound", "pass"});
  const auto coeffs = tail_coefficients(c);
  FieldOptions fopts;
  fopts.r_points = c.grid_points;
  fopts.theta_points = c.theta_points;
  fopts.tol = c.tol;
  std::vector<std::vector<double>> k_prime(c.tail_eps.size());
  for (double lg : c.tail_l_gamma) {
    const CollarGeometry geom(lg);
    const auto raw = synthesize_field(geom, SpectralParam::from_lambda(c.lambda), coeffs, fopts);
    const auto field = raw.scaled(0.25 * c.tail_t / raw.boundary_sup());
    for (std::size_t e = 0; e < c.tail_eps.size(); ++e) {
      const auto rep = tail_bound_check(field, c.tail_eps[e], c.tail_t);
      rows.add_row({full(lg), full(rep.eps), full(rep.boundary_sup), full(rep.sup_first_mode),
                    full(rep.k_prime), full(rep.bound), yes_no(rep.pass())});
      k_prime[e].push_back(rep.k_prime);
      if (!rep.pass())
        out.failures.push_back("tail: sup |[f]_1| <= 2 t K' eps^(1/2)/(1 - eps) at l_gamma=" + full(lg) +
                               " eps=" + full(rep.eps) + ": measured " + full(rep.sup_first_mode) +
                               " > bound " + full(rep.bound));
    }
  }
  for (std::size_t e = 0; e < c.tail_eps.size(); ++e) {
    const auto [lo, hi] = std::minmax_element(k_prime[e].begin(), k_prime[e].end());
    const double variation = *hi / *lo;
    if (!std::isfinite(variation) || !(variation < 2.0))
      out.failures.push_back("tail: K' stable across l_gamma (< 2x) at eps=" + full(c.tail_eps[e]) +
                             ": variation " + full(variation));
  }
  out.notes.push_back(std::to_string(rows.rows().size()) + " tail bounds checked");
  out.tables.push_back({"bound", std::move(rows)});
  return out;
}

SuiteResult run_nodal(const RunConfig& c) {
  SuiteResult out{"nodal", {}, {}, {}};
  report::CsvTable rows("hypmass.nodal.decomposition.v1",
                        {"source", "graph_chi", "components", "euler_sum", "surface_chi", "verdict"});
  const auto record = [&](const std::string& source, const NodalDecomposition& d) {
    const auto sum = euler_sum(d);
    std::string verdict = "n/a";
    if (d.punctures_in_t1 && d.essential_nodal_set) verdict = to_string(crossing_verdict(d));
    rows.add_row({source, std::to_string(d.graph.chi()), std::to_string(d.components.size()),
                  std::to_string(sum.sum), std::to_string(sum.surface_chi), verdict});
    return verdict;
  };

  if (c.nodal_input) {
    std::ifstream in(*c.nodal_input);
    if (!in) throw ConfigError("cannot open nodal input '" + *c.nodal_input + "'");
    const auto d = read_decomposition(in);
    const auto verdict = record(*c.nodal_input, d);
    out.notes.push_back(verdict);
  } else {
    const CollarGeometry geom(c.l_gamma);
    FieldOptions fopts;
    fopts.r_points = std::min(c.grid_points, 512);
    fopts.theta_points = c.theta_points;
    fopts.tol = c.tol;
    const auto field = synthesize_field(geom, SpectralParam::from_lambda(c.lambda),
                                        {{0, 0.0, 0.0, 0.0, 0.0}, {1, 0.0, 1.0, 0.0, 0.0}}, fopts);
    const auto d = nodal_graph_extract(field);
    record("cos(theta) c_1 field", d);
    long pos = 0, neg = 0;
    for (const auto& comp : d.components) {
      if (comp.sign == ComponentSign::positive && comp.chi == 1) ++pos;
      if (comp.sign == ComponentSign::negative && comp.chi == 1) ++neg;
    }
    if (!(d.components.size() == 2 && pos == 1 && neg == 1 && d.graph.chi() == -2 &&
          euler_sum(d).consistent()))
      out.failures.push_back("nodal: cos(theta) field has two strip domains (chi 1) and two nodal arcs (chi -2)");

    NodalDecomposition h;
    h.graph = {0, 0};
    h.components = {{ComponentSign::ambient, 0}, {ComponentSign::positive, -1}};
    h.surface_chi = 1;
    h.punctures_in_t1 = true;
    h.essential_nodal_set = true;
    if (record("hypothesis sample", h) != to_string(CrossingVerdict::crossing_forced))
      out.failures.push_back("nodal: hypothesis-satisfying decomposition forces a crossing");
  }
  out.tables.push_back({"decomposition", std::move(rows)});
  return out;
}

SuiteResult run_suite(const std::string& name, const RunConfig& config) {
  if (name == "cusp") return run_cusp(config);
  if (name == "collar") return run_collar(config);
  if (name == "tail") return run_tail(config);
  if (name == "nodal") return run_nodal(config);
  throw ConfigError("unknown suite '" + name + "'");
}

report::CsvTable sweep_degeneration(const RunConfig& c) {
  if (c.schedule.empty()) throw ConfigError("empty l_gamma schedule");
  const auto family =
      PinchFamily::from_schedule(c.schedule, std::vector<double>(c.schedule.size(), c.lambda));
  const auto metric = metric_convergence_sweep(family, c.r_shifted);
  const auto potential = potential_convergence_sweep(family, c.potential_j, c.r_shifted);
  report::CsvTable t("hypmass.sweep.degeneration.v1",
                     {"l_gamma", "r_shifted", "metric_value", "metric_limit", "metric_error",
                      "potential_value", "potential_limit", "potential_rel_error"});
  for (std::size_t i = 0; i < metric.rows.size(); ++i) {
    const auto& m = metric.rows[i];
    const auto& p = potential.rows[i];
    t.add_row({full(m.l_gamma), full(m.r), full(m.value), full(m.limit), full(m.error),
               full(p.value), full(p.limit), full(p.error)});
  }
  return t;
}

report::CsvTable sweep_constants(const RunConfig& c) {
  if (c.constants_eps.empty()) throw ConfigError("empty eps schedule");
  const CollarGeometry geom(c.l_gamma);
  const double eps0 = c.eps0.value_or(geom.margulis());
  report::CsvTable t("hypmass.sweep.constants.v1", {"l_gamma", "eps", "eta", "eps0", "t0", "t1", "t2"});
  for (double eps : c.constants_eps) {
    t.add_row({full(c.l_gamma), full(eps), c.eta ? full(*c.eta) : "", full(eps0),
               c.eta ? full(t0_constant(geom, eps, *c.eta)) : "", full(t1_constant(geom, eps)),
               full(t2_constant(geom, eps, eps0))});
  }
  return t;
}

report::CsvTable sweep_tail_ratio(const RunConfig& c) {
  const auto b_values = cusp_b_values(c);
  if (b_values.empty()) throw ConfigError("empty height schedule");
  const auto sweep = cusp::sweep_k_hat(b_values, c.cusp_n_max, c.cusp_s, c.tol);
  report::CsvTable t("hypmass.sweep.tail_ratio.v1", {"b", "n", "s", "log_ratio", "ratio"});
  for (const auto& r : sweep.rows)
    t.add_row({full(r.b), std::to_string(r.n), full(r.s), full(r.log_ratio), full(r.ratio())});
  return t;
}

std::string to_json(const report::CsvTable& table) { return table_json(table).dump(2) + "\n"; }

std::string to_json(const SuiteResult& r) {
  nlohmann::json tables = nlohmann::json::object();
  for (const auto& t : r.tables) tables[t.name] = table_json(t.table);
  const nlohmann::json doc = {{"suite", r.suite},     {"pass", r.pass()},
                              {"notes", r.notes},     {"failures", r.failures},
                              {"tables", std::move(tables)}};
  return doc.dump(2) + "\n";
}

}  // namespace hypmass::cli
