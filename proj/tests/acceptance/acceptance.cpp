// Acceptance suite: one PASS/FAIL line per criterion, details indented below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hypmass/collar_field.hpp"
#include "hypmass/collar_modes.hpp"
#include "hypmass/config.hpp"
#include "hypmass/cusp_mass.hpp"
#include "hypmass/degeneration.hpp"
#include "hypmass/geometry.hpp"
#include "hypmass/nodal.hpp"
#include "hypmass/specfun.hpp"
#include "hypmass_cli/cli.hpp"
#include "hypmass_cli/suites.hpp"

using namespace hypmass;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    details.push_back(std::string(ok ? "ok   " : "MISS ") + what);
  }
  void note(const std::string& what) { details.push_back("info " + what); }
};

std::string num(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double true_phi(const ModeState& s) { return s.phi * std::exp(s.log_scale); }

Outcome mcdonald_contracts() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const double y0 = specfun::bound_threshold();
  constexpr int kPoints = 200;
  long checked = 0, lower_fail = 0, upper_fail = 0;
  double first_upper_fail = INFINITY, worst_split = 0.0, worst_half = 0.0;
  for (double eps : {0.0, 0.1, 0.25, 0.5}) {
    for (int i = 0; i < kPoints; ++i) {
      const double y = y0 + (50.0 - y0) * i / (kPoints - 1);
      const auto b = specfun::check_k_bounds(eps, y);
      ++checked;
      if (!b.lower_holds()) ++lower_fail;
      if (!b.upper_holds()) {
        ++upper_fail;
        first_upper_fail = std::min(first_upper_fail, y);
      }
      const auto sp = specfun::k_split(eps, y);
      worst_split = std::max(worst_split, std::abs((sp.c + sp.d) / 2 - b.value) / b.value);
      if (eps == 0.5) {
        const double exact = std::sqrt(kPi / (2 * y)) * std::exp(-y);
        worst_half = std::max(worst_half, std::abs(b.value - exact) / exact);
      }
    }
  }
  const double elapsed = seconds_since(t0);
  o.require(lower_fail == 0, "lower bound strict at " + std::to_string(checked - lower_fail) + "/" +
                                 std::to_string(checked) + " grid points");
  o.require(upper_fail == 0, "upper bound strict at " + std::to_string(checked - upper_fail) + "/" +
                                 std::to_string(checked) + " grid points" +
                                 (upper_fail ? " (first violation at y = " + num(first_upper_fail) + ")" : ""));
  o.require(worst_split < 1e-10, "split identity |(c+d)/2 - K| / K = " + num(worst_split) + " < 1e-10");
  o.require(worst_half < 1e-10, "K_1/2 closed form relative error " + num(worst_half) + " < 1e-10");
  o.require(elapsed < 10.0, "runtime " + num(elapsed) + " s < 10 s");
  return o;
}

Outcome cusp_mass() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  int pairs = 0;
  double worst = 0.0;
  for (double s : {0.05, 0.15, 0.3, 0.45})
    for (double b : {3 * kPi, 4 * kPi, 8 * kPi}) {
      const double closed = cusp::residual_tail_ratio_sq(s, b);
      worst = std::max(worst, std::abs(cusp::residual_tail_ratio_sq_quadrature(s, b) - closed) / closed);
      ++pairs;
    }
  o.require(pairs >= 10 && worst < 1e-10,
            "residual identity at " + std::to_string(pairs) + " (s, b) pairs, worst rel diff " + num(worst));
  const auto sweep = cusp::sweep_k_hat({4 * kPi, 8 * kPi, 16 * kPi, 32 * kPi});
  std::string khat;
  for (const auto& [b, k] : sweep.k_hat) khat += " " + num(k);
  o.require(sweep.strictly_decreasing(), "K(b) strictly decreasing:" + khat);
  o.require(sweep.k_hat.back().second < 0.1 * sweep.k_hat.front().second, "K(32 pi) < 0.1 K(4 pi)");
  const double elapsed = seconds_since(t0);
  o.require(elapsed < 60.0, "runtime " + num(elapsed) + " s < 60 s");
  return o;
}

Outcome collar_ode() {
  Outcome o;
  const CollarGeometry g(0.01);
  const auto s0 = solve_mode(ModeODE{g, SpectralParam::from_lambda(0.0), 0}, ModeKind::s);
  double gd_err = 0.0;
  for (const auto& s : s0.samples())
    if (s.r >= 0.0 && s.r <= 5.0)
      gd_err = std::max(gd_err, std::abs(true_phi(s) - 2 * std::atan(std::tanh(s.r / 2))));
  o.require(gd_err < 1e-8, "s_0 = gd(r) on [0, 5], sup error " + num(gd_err));
  const auto c0 = solve_mode(ModeODE{g, SpectralParam::from_lambda(0.0), 0}, ModeKind::c);
  double c_err = 0.0;
  for (const auto& s : c0.samples()) c_err = std::max(c_err, std::abs(true_phi(s) - 1.0));
  o.require(c_err < 1e-10, "c_0 = 1, sup error " + num(c_err));
  double parity = 0.0, transform = 0.0;
  for (double lambda : {0.0, 0.16})
    for (int j : {0, 1, 2, 4})
      for (ModeKind kind : {ModeKind::s, ModeKind::c}) {
        const auto sol = solve_mode(ModeODE{g, SpectralParam::from_lambda(lambda), j}, kind);
        parity = std::max(parity, sol.parity_defect());
        const auto tr = sol.transform_residuals();
        transform = std::max(transform, *std::max_element(tr.begin(), tr.end()));
      }
  o.require(parity < 1e-9, "parity defect " + num(parity) + " < 1e-9");
  o.require(transform < 1e-6, "transformed equation residual " + num(transform) + " < 1e-6");
  return o;
}

Outcome monotonicity() {
  Outcome o;
  int increasing = 0, skipped = 0, counterexamples = 0, other = 0;
  for (auto [lambda, delta] : {std::pair{0.16, 0.3}, std::pair{0.2, 0.2}, std::pair{0.0, 0.5}})
    for (double lg : {1e-2, 1e-3})
      for (int j : {0, 1, 2, 4})
        for (ModeKind kind : {ModeKind::s, ModeKind::c}) {
          const auto sol = solve_mode(ModeODE{CollarGeometry(lg), SpectralParam::from_lambda(lambda), j}, kind);
          switch (monotone_ratio_check(transform_u(sol), delta).verdict) {
            case MonotoneVerdict::increasing: ++increasing; break;
            case MonotoneVerdict::hypothesis_not_satisfied: ++skipped; break;
            case MonotoneVerdict::not_increasing: ++counterexamples; break;
            case MonotoneVerdict::precondition_failed: ++other; break;
          }
        }
  o.require(counterexamples == 0 && other == 0,
            std::to_string(increasing) + " increasing, " + std::to_string(skipped) +
                " without the hypothesis, " + std::to_string(counterexamples) + " counterexamples");
  o.require(increasing > 0, "hypothesis met on at least one case");
  return o;
}

Outcome collar_constants() {
  Outcome o;
  for (double lg : {1e-2, 1e-3}) {
    const auto rep = verify_collar_lemma(CollarGeometry(lg), SpectralParam::from_lambda(0.16), 4, 0.1, 0.09);
    double worst = 0.0;
    for (const auto& r : rep.rows) worst = std::max(worst, r.measured / r.constant);
    o.require(rep.pass(), "collar lemma at l_gamma = " + num(lg) + ": " + std::to_string(rep.rows.size()) +
                              " ratios, worst measured/constant " + num(worst));
  }
  const CollarGeometry g(1e-3);
  std::vector<double> t0, t1;
  for (double eps : {0.3, 0.1, 0.03, 0.01}) {
    t0.push_back(t0_constant(g, eps, 0.09));
    t1.push_back(t1_constant(g, eps));
  }
  const auto decreasing = [](const std::vector<double>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::less_equal<>()) == v.end();
  };
  std::string t0s, t1s;
  for (double v : t0) t0s += " " + num(v);
  for (double v : t1) t1s += " " + num(v);
  o.require(decreasing(t0) && t0.back() < 0.05, "T_0(eps, 0.09) decreasing below 0.05:" + t0s);
  o.require(decreasing(t1) && t1.back() < 0.05, "T_1(eps) decreasing below 0.05:" + t1s);
  for (double lg : {1e-2, 1e-3}) {
    const double a = t2_constant(CollarGeometry(lg), 0.1, 0.5);
    const double b = t2_constant(CollarGeometry(lg / 2), 0.1, 0.5);
    o.require(std::abs(a - b) / a < 0.01,
              "T_2 change " + num(std::abs(a - b) / a) + " < 1% when l_gamma = " + num(lg) + " is halved");
  }
  return o;
}

Outcome tail_bound() {
  Outcome o;
  RunConfig c;
  const auto result = cli::run_tail(c);
  const auto& rows = result.tables.front().table.rows();
  for (const auto& f : result.failures) o.require(false, f);
  double lo = INFINITY, hi = 0.0;
  for (const auto& r : rows) {
    const double k = std::stod(r[4]);
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  o.require(result.pass() && rows.size() == 9, std::to_string(rows.size()) +
                                                   " (l_gamma, eps) cases within 2 t K' eps^(1/2)/(1 - eps)");
  o.require(std::isfinite(hi) && hi / lo < 2.0, "K' in [" + num(lo) + ", " + num(hi) + "]");
  return o;
}

Outcome degeneration() {
  Outcome o;
  const auto fam = PinchFamily::from_schedule({1e-1, 1e-2, 1e-3}, {0.2, 0.2, 0.2});
  const auto metric = metric_convergence_sweep(fam, {0.0});
  const double limits[] = {1e-2, 1e-4, 1e-6};
  for (std::size_t i = 0; i < 3; ++i)
    o.require(metric.rows[i].error < limits[i],
              "metric error " + num(metric.rows[i].error) + " < " + num(limits[i]) + " at l_gamma = " +
                  num(metric.rows[i].l_gamma));
  for (std::size_t i = 0; i + 1 < 3; ++i) {
    const double ratio = metric.rows[i].error / metric.rows[i + 1].error;
    o.require(ratio > 50.0 && ratio < 200.0, "error ratio per decade " + num(ratio) + " (quadratic)");
  }
  const auto pot = potential_convergence_sweep(fam, 1, {0.0});
  o.require(pot.rows.back().error < 1e-3,
            "potential j = 1 relative error to pi^2 at l_gamma = 1e-3: " + num(pot.rows.back().error));
  return o;
}

Outcome nodal_topology() {
  Outcome o;
  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<long> f_chi(-3, 0), dom_chi(-3, -1), z_chi(-4, 0), count(1, 4), verts(0, 6);
  int forced = 0;
  constexpr int kCorpus = 40;
  for (int n = 0; n < kCorpus; ++n) {
    NodalDecomposition d;
    d.surface_chi = 1;
    const long v = verts(rng);
    d.graph = {v, v - z_chi(rng)};
    d.components.push_back({ComponentSign::ambient, f_chi(rng)});
    const long k = count(rng);
    for (long i = 0; i < k; ++i)
      d.components.push_back({i % 2 ? ComponentSign::negative : ComponentSign::positive, dom_chi(rng)});
    d.punctures_in_t1 = true;
    d.essential_nodal_set = true;
    std::stringstream text;
    write_decomposition(text, d);
    const auto back = read_decomposition(text);
    if (crossing_verdict(back) == CrossingVerdict::crossing_forced && !euler_sum(back).consistent()) ++forced;
  }
  o.require(forced == kCorpus, std::to_string(forced) + "/" + std::to_string(kCorpus) +
                                   " hypothesis-satisfying decompositions force a crossing");

  const std::size_t nr = 24, nt = 48;
  std::vector<double> grid(nr * nt);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t k = 0; k < nt; ++k) grid[i * nt + k] = std::cos(2 * kPi * (k + 0.25) / nt);
  const auto d = nodal_graph_extract(grid, nr, nt);
  const bool hand = d.components.size() == 2 && d.components[0].chi == 1 && d.components[1].chi == 1 &&
                    d.graph.chi() == -2 && euler_sum(d).sum == 0;
  o.require(hand, "cos(theta) grid: domains chi " + std::to_string(d.components.at(0).chi) + ", " +
                      std::to_string(d.components.at(1).chi) + "; chi(Z) = " + std::to_string(d.graph.chi()) +
                      " (hand: 1, 1, -2)");

  FieldOptions fo;
  fo.r_points = 256;
  fo.theta_points = 64;
  const auto field = synthesize_field(CollarGeometry(0.01), SpectralParam::from_lambda(0.16),
                                      {{1, 0.0, 1.0, 0.0, 0.0}}, fo);
  const auto df = nodal_graph_extract(field);
  o.require(df.components.size() == 2 && df.graph.chi() == -2 && euler_sum(df).consistent(),
            "c_1(r) cos(theta) collar field: same topology as cos(theta)");
  return o;
}

Outcome dichotomy() {
  Outcome o;
  DichotomyInput constant{{0.5, 0.2, 0.1}, {}};
  DichotomyInput vanishing{{0.5, 0.2, 0.1}, {}};
  for (int k = 0; k <= 8; ++k) {
    const double m = std::pow(10.0, k);
    constant.members.push_back({1.0 / m, 0.2, {0.9, 0.9, 0.9}});
    vanishing.members.push_back({1.0 / m, 0.2, {1.0 / m, 1.0 / m, 1.0 / m}});
  }
  o.require(classify_dichotomy(constant).kind == DichotomyCase::case1, "constant masses 0.9: case 1");
  const auto v = classify_dichotomy(vanishing);
  o.require(v.kind == DichotomyCase::case2, "masses 1/m: case 2");
  o.require(v.renormalizers_nondecreasing && v.renormalizers_diverging,
            "K_m nondecreasing up to " + num(v.renormalizers.empty() ? 0.0 : v.renormalizers.back()) +
                " > " + num(v.divergence_bound));

  const auto t0 = std::chrono::steady_clock::now();
  const auto dir = std::filesystem::temp_directory_path() / "hypmass_acceptance_reports";
  std::ostringstream out, err;
  const int code = cli::run({"verify", "all", "--out-dir", dir.string()}, out, err);
  const double elapsed = seconds_since(t0);
  o.require(code == 0, "verify all exit code " + std::to_string(code));
  o.require(elapsed < 300.0, "verify all runtime " + num(elapsed) + " s < 300 s");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"McDonald-function contracts", mcdonald_contracts},
      {"cusp mass", cusp_mass},
      {"collar ODE", collar_ode},
      {"monotonicity of u / cosh(delta r)", monotonicity},
      {"collar lemma constants", collar_constants},
      {"tail bound", tail_bound},
      {"degeneration", degeneration},
      {"nodal topology", nodal_topology},
      {"dichotomy classifier", dichotomy},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first
              << '\n';
    for (const auto& d : o.details) std::cout << "    " << d << '\n';
    std::cout.flush();
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
