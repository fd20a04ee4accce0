#include "hypmass/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <sstream>

#include "hypmass/error.hpp"

namespace hypmass {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

using Setter = std::function<void(RunConfig&, std::string_view)>;

template <class T>
Setter positive_double(T RunConfig::*field) {
  return [field](RunConfig& c, std::string_view v) {
    const double x = parse_double(v);
    if (!(x > 0.0)) throw ConfigError("expected a positive value, got '" + std::string(v) + "'");
    c.*field = x;
  };
}

Setter list(std::vector<double> RunConfig::*field) {
  return [field](RunConfig& c, std::string_view v) { c.*field = parse_double_list(v); };
}

Setter positive_int(int RunConfig::*field) {
  return [field](RunConfig& c, std::string_view v) {
    const int x = parse_int(v);
    if (x <= 0) throw ConfigError("expected a positive integer, got '" + std::string(v) + "'");
    c.*field = x;
  };
}

Setter tolerance(double Tolerances::*field) {
  return [field](RunConfig& c, std::string_view v) {
    const double x = parse_double(v);
    if (!(x > 0.0)) throw ConfigError("tolerances must be > 0");
    c.tol.*field = x;
  };
}

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"format", [](RunConfig& c, std::string_view v) { c.format = parse_format(v); }},
      {"out_dir", [](RunConfig& c, std::string_view v) { c.out_dir = std::string(v); }},
      {"out", [](RunConfig& c, std::string_view v) { c.out_file = std::string(v); }},
      {"profile",
       [](RunConfig& c, std::string_view v) {
         c.profile = std::string(v);
         resolve_tolerances(c);
       }},
      {"quad_abs", tolerance(&Tolerances::quad_abs)},
      {"quad_rel", tolerance(&Tolerances::quad_rel)},
      {"ode_abs", tolerance(&Tolerances::ode_abs)},
      {"ode_rel", tolerance(&Tolerances::ode_rel)},
      {"lambda", [](RunConfig& c, std::string_view v) { c.lambda = parse_double(v); }},
      {"lgamma", positive_double(&RunConfig::l_gamma)},
      {"eps", positive_double(&RunConfig::eps)},
      {"eta",
       [](RunConfig& c, std::string_view v) {
         if (v == "none") {
           c.eta.reset();
           return;
         }
         c.eta = parse_double(v);
       }},
      {"eps0", [](RunConfig& c, std::string_view v) { c.eps0 = parse_double(v); }},
      {"jmax",
       [](RunConfig& c, std::string_view v) {
         c.j_max = parse_int(v);
         if (c.j_max < 0) throw ConfigError("jmax must be >= 0");
       }},
      {"grid_points", positive_int(&RunConfig::grid_points)},
      {"theta_points", positive_int(&RunConfig::theta_points)},
      {"constants_eps", list(&RunConfig::constants_eps)},
      {"k_eps", list(&RunConfig::k_eps)},
      {"k_y_min", [](RunConfig& c, std::string_view v) { c.k_y_min = parse_double(v); }},
      {"k_y_max", positive_double(&RunConfig::k_y_max)},
      {"k_y_points", positive_int(&RunConfig::k_y_points)},
      {"cusp_b", list(&RunConfig::cusp_b)},
      {"cusp_nmax", positive_int(&RunConfig::cusp_n_max)},
      {"cusp_s", list(&RunConfig::cusp_s)},
      {"residual_s", list(&RunConfig::residual_s)},
      {"tail_lgamma", list(&RunConfig::tail_l_gamma)},
      {"tail_eps", list(&RunConfig::tail_eps)},
      {"tail_t", positive_double(&RunConfig::tail_t)},
      {"tail_jmax", positive_int(&RunConfig::tail_j_max)},
      {"nodal_input", [](RunConfig& c, std::string_view v) { c.nodal_input = std::string(v); }},
      {"schedule", list(&RunConfig::schedule)},
      {"r_shifted", list(&RunConfig::r_shifted)},
      {"potential_j", positive_int(&RunConfig::potential_j)},
      {"dichotomy_eps", list(&RunConfig::dichotomy_eps)},
      {"dichotomy_delta", positive_double(&RunConfig::dichotomy_delta)},
      {"tail_fraction", positive_double(&RunConfig::tail_fraction)},
  };
  return table;
}

void apply_member_key(PinchMember& m, std::string_view key, std::string_view value) {
  if (key == "lgamma") {
    m.l_gamma = parse_double(value);
  } else if (key == "lambda") {
    m.lambda = parse_double(value);
  } else if (key == "mode") {
    const auto parts = split_ws(value);
    if (parts.size() != 5) throw ConfigError("mode expects 'j a b a_prime b_prime'");
    FieldCoefficients f;
    f.j = parse_int(parts[0]);
    f.a = parse_double(parts[1]);
    f.b = parse_double(parts[2]);
    f.a_prime = parse_double(parts[3]);
    f.b_prime = parse_double(parts[4]);
    if (f.j < 0) throw ConfigError("mode index must be >= 0");
    m.coefficients.push_back(f);
  } else {
    throw ConfigError("unknown member key '" + std::string(key) + "'");
  }
}

}  // namespace

const char* to_string(OutputFormat f) noexcept {
  switch (f) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::human: return "human";
  }
  return "?";
}

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "human") return OutputFormat::human;
  throw ConfigError("unknown format '" + std::string(name) + "' (csv, json, human)");
}

double parse_double(std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (text.empty() || res.ec != std::errc() || res.ptr != end || !std::isfinite(v))
    throw ConfigError("not a finite number: '" + std::string(text) + "'");
  return v;
}

int parse_int(std::string_view text) {
  text = trim(text);
  int v = 0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (text.empty() || res.ec != std::errc() || res.ptr != end)
    throw ConfigError("not an integer: '" + std::string(text) + "'");
  return v;
}

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_double(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void apply_config_key(RunConfig& config, std::string_view key, std::string_view value) {
  const auto& table = setters();
  const auto it = table.find(key);
  if (it == table.end()) throw ConfigError("unknown config key '" + std::string(key) + "'");
  it->second(config, trim(value));
}

void resolve_tolerances(RunConfig& config) {
  if (const char* env = std::getenv("HYPMASS_TOLERANCE_PROFILE"); env != nullptr && *env != '\0')
    config.profile = env;
  config.tol = tolerance_profile(config.profile);
}

RunConfig parse_run_config(std::istream& in, RunConfig base) {
  RunConfig c = std::move(base);
  PinchMember* member = nullptr;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    try {
      if (line.front() == '[') {
        if (line != "[member]") throw ConfigError("unknown section " + std::string(line));
        member = &c.members.emplace_back();
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'");
      const auto key = trim(line.substr(0, eq));
      const auto value = trim(line.substr(eq + 1));
      if (member != nullptr)
        apply_member_key(*member, key, value);
      else
        apply_config_key(c, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(where() + e.what());
    }
  }
  c.validate();
  return c;
}

RunConfig load_run_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  try {
    return parse_run_config(in, std::move(base));
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void RunConfig::validate() const {
  if (!(tol.quad_abs > 0 && tol.quad_rel > 0 && tol.ode_abs > 0 && tol.ode_rel > 0))
    throw ConfigError("all tolerances must be > 0");
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
    throw ConfigError("tail_fraction must lie in (0, 1]");
  if (k_eps.empty() || tail_l_gamma.empty() || tail_eps.empty() || dichotomy_eps.empty())
    throw ConfigError("grids must be non-empty");
  for (const auto& m : members)
    if (!(m.l_gamma > 0.0)) throw ConfigError("every [member] needs lgamma > 0");
}

}  // namespace hypmass
