#include "hypmass/nodal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "hypmass/error.hpp"

namespace hypmass {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

bool is_signed(ComponentSign s) {
  return s == ComponentSign::positive || s == ComponentSign::negative;
}

ComponentSign parse_sign(const std::string& token) {
  if (token == "F") return ComponentSign::ambient;
  if (token == "+") return ComponentSign::positive;
  if (token == "-") return ComponentSign::negative;
  if (token == "?") return ComponentSign::unspecified;
  throw ConfigError("decomposition: unknown component sign '" + token + "'");
}

const char* sign_token(ComponentSign s) {
  switch (s) {
    case ComponentSign::ambient: return "F";
    case ComponentSign::positive: return "+";
    case ComponentSign::negative: return "-";
    case ComponentSign::unspecified: return "?";
  }
  return "?";
}

bool parse_bool(const std::string& token) {
  if (token == "true") return true;
  if (token == "false") return false;
  throw ConfigError("decomposition: expected true or false, got '" + token + "'");
}

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

const char* to_string(ComponentSign sign) noexcept {
  switch (sign) {
    case ComponentSign::positive: return "positive";
    case ComponentSign::negative: return "negative";
    case ComponentSign::ambient: return "ambient";
    case ComponentSign::unspecified: return "unspecified";
  }
  return "unspecified";
}

const char* to_string(CrossingVerdict verdict) noexcept {
  return verdict == CrossingVerdict::crossing_forced ? "crossing_forced" : "consistent";
}

EulerSum euler_sum(const NodalDecomposition& decomp) {
  EulerSum out;
  out.surface_chi = decomp.surface_chi;
  out.sum = decomp.graph.chi();
  for (const NodalComponent& c : decomp.components) {
    if (c.sign == ComponentSign::unspecified)
      throw DomainError("Euler sum: every nodal domain other than F needs a sign");
    out.sum += c.chi;
  }
  return out;
}

CrossingVerdict crossing_verdict(const NodalDecomposition& decomp) {
  if (!decomp.punctures_in_t1 || !decomp.essential_nodal_set)
    throw DomainError("crossing verdict: hypothesis flags punctures_in_t1 and "
                      "essential_nodal_set must be stated");
  const bool any_signed = std::any_of(decomp.components.begin(), decomp.components.end(),
                                      [](const auto& c) { return is_signed(c.sign); });
  if (!any_signed) throw DomainError("crossing verdict: no nodal domain besides F");
  const EulerSum sum = euler_sum(decomp);

  bool hypothesis = *decomp.punctures_in_t1 && *decomp.essential_nodal_set &&
                    decomp.graph.chi() <= 0;
  for (const NodalComponent& c : decomp.components) {
    if (is_signed(c.sign) && c.chi >= 0) hypothesis = false;
    if (c.sign == ComponentSign::ambient && c.chi > 0) hypothesis = false;
  }
  return hypothesis && !sum.consistent() ? CrossingVerdict::crossing_forced
                                         : CrossingVerdict::consistent;
}

NodalDecomposition disjoint_union(const NodalDecomposition& a, const NodalDecomposition& b) {
  NodalDecomposition out;
  out.graph = {a.graph.vertices + b.graph.vertices, a.graph.edges + b.graph.edges};
  out.components = a.components;
  out.components.insert(out.components.end(), b.components.begin(), b.components.end());
  out.surface_chi = a.surface_chi + b.surface_chi;
  const auto both = [](std::optional<bool> x, std::optional<bool> y) -> std::optional<bool> {
    if (!x || !y) return std::nullopt;
    return *x && *y;
  };
  out.punctures_in_t1 = both(a.punctures_in_t1, b.punctures_in_t1);
  out.essential_nodal_set = both(a.essential_nodal_set, b.essential_nodal_set);
  return out;
}

void write_decomposition(std::ostream& out, const NodalDecomposition& decomp) {
  out << "surface_chi " << decomp.surface_chi << '\n';
  out << "graph " << decomp.graph.vertices << ' ' << decomp.graph.edges << '\n';
  for (const NodalComponent& c : decomp.components)
    out << "component " << sign_token(c.sign) << ' ' << c.chi << '\n';
  if (decomp.punctures_in_t1)
    out << "hypothesis punctures_in_t1 " << (*decomp.punctures_in_t1 ? "true" : "false") << '\n';
  if (decomp.essential_nodal_set)
    out << "hypothesis essential_nodal_set " << (*decomp.essential_nodal_set ? "true" : "false")
        << '\n';
}

NodalDecomposition read_decomposition(std::istream& in) {
  NodalDecomposition out;
  bool have_surface = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    const auto fail = [&](const std::string& what) {
      return ConfigError("decomposition line " + std::to_string(line_no) + ": " + what);
    };
    if (key == "surface_chi") {
      if (!(ls >> out.surface_chi)) throw fail("expected an integer");
      have_surface = true;
    } else if (key == "graph") {
      if (!(ls >> out.graph.vertices >> out.graph.edges)) throw fail("expected V E");
      if (out.graph.vertices < 0 || out.graph.edges < 0) throw fail("negative graph counts");
    } else if (key == "component") {
      std::string sign;
      NodalComponent c;
      if (!(ls >> sign >> c.chi)) throw fail("expected a sign and an Euler characteristic");
      c.sign = parse_sign(sign);
      out.components.push_back(c);
    } else if (key == "hypothesis") {
      std::string name;
      std::string value;
      if (!(ls >> name >> value)) throw fail("expected a hypothesis name and value");
      if (name == "punctures_in_t1") {
        out.punctures_in_t1 = parse_bool(value);
      } else if (name == "essential_nodal_set") {
        out.essential_nodal_set = parse_bool(value);
      } else {
        throw fail("unknown hypothesis '" + name + "'");
      }
    } else {
      throw fail("unknown key '" + key + "'");
    }
    std::string extra;
    if (ls >> extra) throw fail("trailing token '" + extra + "'");
  }
  if (!have_surface) throw ConfigError("decomposition: missing surface_chi");
  return out;
}

std::vector<SignTrace> sign_scan(const CollarField& field, const std::vector<double>& r_values) {
  const double L1 = field.geometry().unit_radius();
  std::vector<SignTrace> out;
  for (double r : r_values) {
    if (std::abs(r) > L1 * (1.0 + 1e-12)) throw DomainError("sign scan: r outside the collar");
    SignTrace tr;
    tr.r = r;
    const std::vector<double> trace = field.trace_at(r);
    const double a0 = field.coefficients_at(r).a.front();
    tr.zero_mode_abs = std::abs(a0);
    for (double v : trace) tr.signs.push_back(sign_of(v));
    for (double v : field.first_mode_trace_at(r))
      tr.first_mode_sup = std::max(tr.first_mode_sup, std::abs(v));
    tr.constant_sign = !tr.signs.empty() && tr.signs.front() != 0 &&
                       std::all_of(tr.signs.begin(), tr.signs.end(),
                                   [&](int s) { return s == tr.signs.front(); });
    tr.dominant_zero_mode = tr.zero_mode_abs > tr.first_mode_sup;
    out.push_back(std::move(tr));
  }
  return out;
}

NodalDecomposition nodal_graph_extract(const std::vector<double>& values, std::size_t n_r,
                                       std::size_t n_theta) {
  if (n_r < 2 || n_theta < 3 || values.size() != n_r * n_theta)
    throw DomainError("nodal extraction: grid must be at least 2 x 3 and match the value count");
  const std::size_t n_grid = n_r * n_theta;
  const std::size_t n_cells = (n_r - 1) * n_theta;
  const auto grid_id = [n_theta](std::size_t i, std::size_t k) { return i * n_theta + k % n_theta; };
  const auto centre_id = [n_grid, n_theta](std::size_t i, std::size_t k) {
    return n_grid + i * n_theta + k;
  };

  // Vertex signs with symbolic perturbation of exact zeros.
  std::vector<int> sign(n_grid + n_cells, 0);
  for (std::size_t i = 0; i < n_r; ++i) {
    for (std::size_t k = 0; k < n_theta; ++k) {
      const double v = values[grid_id(i, k)];
      if (!std::isfinite(v)) throw DomainError("nodal extraction: non-finite field value");
      sign[grid_id(i, k)] = sign_of(v);
    }
  }
  for (std::size_t i = 0; i < n_r; ++i) {
    for (std::size_t k = 0; k < n_theta; ++k) {
      if (sign[grid_id(i, k)] != 0) continue;
      int s = 0;
      // Fixed scan order: growing rings of theta then r neighbours.
      for (std::size_t d = 1; s == 0 && d < std::max(n_r, n_theta); ++d) {
        const std::size_t kp = (k + d) % n_theta;
        const std::size_t km = (k + n_theta - d % n_theta) % n_theta;
        for (int cand : {sign_of(values[grid_id(i, kp)]),
                         i + d < n_r ? sign_of(values[grid_id(i + d, k)]) : 0,
                         sign_of(values[grid_id(i, km)]),
                         i >= d ? sign_of(values[grid_id(i - d, k)]) : 0}) {
          if (cand != 0) {
            s = cand;
            break;
          }
        }
      }
      if (s == 0) throw DomainError("nodal extraction: field vanishes on a plateau; perturb it");
      sign[grid_id(i, k)] = s;
    }
  }
  for (std::size_t i = 0; i + 1 < n_r; ++i) {
    for (std::size_t k = 0; k < n_theta; ++k) {
      const std::size_t corners[4] = {grid_id(i, k), grid_id(i, k + 1), grid_id(i + 1, k + 1),
                                      grid_id(i + 1, k)};
      double mean = 0.0;
      for (std::size_t c : corners) mean += values[c];
      int s = sign_of(mean);
      for (std::size_t c = 0; s == 0 && c < 4; ++c) s = sign[corners[c]];
      sign[centre_id(i, k)] = s;
    }
  }

  // Edges and triangles of the triangulation.
  struct Edge {
    std::size_t a;
    std::size_t b;
    bool boundary;
  };
  std::vector<Edge> edges;
  std::vector<std::array<std::size_t, 3>> triangles;
  edges.reserve(2 * n_grid + 4 * n_cells);
  triangles.reserve(4 * n_cells);
  for (std::size_t i = 0; i < n_r; ++i) {
    for (std::size_t k = 0; k < n_theta; ++k) {
      edges.push_back({grid_id(i, k), grid_id(i, k + 1), i == 0 || i + 1 == n_r});
      if (i + 1 < n_r) edges.push_back({grid_id(i, k), grid_id(i + 1, k), false});
    }
  }
  for (std::size_t i = 0; i + 1 < n_r; ++i) {
    for (std::size_t k = 0; k < n_theta; ++k) {
      const std::size_t c = centre_id(i, k);
      const std::size_t q[4] = {grid_id(i, k), grid_id(i, k + 1), grid_id(i + 1, k + 1),
                                grid_id(i + 1, k)};
      for (int e = 0; e < 4; ++e) {
        edges.push_back({c, q[e], false});
        triangles.push_back({c, q[e], q[(e + 1) % 4]});
      }
    }
  }

  NodalDecomposition out;
  out.surface_chi = 0;
  for (const Edge& e : edges)
    if (!e.boundary && sign[e.a] != sign[e.b]) ++out.graph.vertices;
  for (const auto& t : triangles)
    if (!(sign[t[0]] == sign[t[1]] && sign[t[1]] == sign[t[2]])) ++out.graph.edges;

  // Components: same-sign vertices joined by edges; chi of the full subcomplex.
  UnionFind uf(sign.size());
  for (const Edge& e : edges)
    if (sign[e.a] == sign[e.b]) uf.unite(e.a, e.b);
  std::map<std::size_t, long> chi;
  for (std::size_t v = 0; v < sign.size(); ++v) chi[uf.find(v)] += 1;
  for (const Edge& e : edges)
    if (sign[e.a] == sign[e.b]) chi[uf.find(e.a)] -= 1;
  for (const auto& t : triangles)
    if (sign[t[0]] == sign[t[1]] && sign[t[1]] == sign[t[2]]) chi[uf.find(t[0])] += 1;
  for (const auto& [root, x] : chi) {
    out.components.push_back(
        {sign[root] > 0 ? ComponentSign::positive : ComponentSign::negative, x});
  }
  return out;
}

NodalDecomposition nodal_graph_extract(const CollarField& field) {
  std::vector<double> values(field.r_points() * field.theta_points());
  for (std::size_t i = 0; i < field.r_points(); ++i)
    for (std::size_t k = 0; k < field.theta_points(); ++k)
      values[i * field.theta_points() + k] = field.value(i, k);
  return nodal_graph_extract(values, field.r_points(), field.theta_points());
}

}  // namespace hypmass
