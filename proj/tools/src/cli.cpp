#include "hypmass_cli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "hypmass/config.hpp"
#include "hypmass/error.hpp"
#include "hypmass/report.hpp"
#include "hypmass/specfun.hpp"
#include "hypmass_cli/suites.hpp"

namespace hypmass::cli {

namespace {

using report::full;

/// Flags that map one-to-one onto config keys; applied after the config file.
struct Overrides {
  std::map<std::string, std::string> values;

  void bind(CLI::App* app, const std::string& flag, const std::string& key, const std::string& help) {
    app->add_option_function<std::string>(
        flag, [this, key](const std::string& v) { values[key] = v; }, help);
  }
};

struct SpecfunArgs {
  double eps = 0.0;
  double y = 0.0;
  double s = 1.0;
  int n = 1;
  double x = 0.0;
};

void emit(const report::CsvTable& table, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::csv: table.write(out); break;
    case OutputFormat::json: out << to_json(table); break;
    case OutputFormat::human: table.write_human(out); break;
  }
}

report::CsvTable specfun_table(const std::string& which, const SpecfunArgs& a, const Tolerances& tol,
                               bool& contract_ok) {
  contract_ok = true;
  if (which == "k") {
    report::CsvTable t("hypmass.specfun.k.v1", {"eps", "y", "k"});
    t.add_row({full(a.eps), full(a.y), full(specfun::mcdonald_k(a.eps, a.y, tol))});
    return t;
  }
  if (which == "bounds") {
    const auto b = specfun::check_k_bounds(a.eps, a.y, tol);
    contract_ok = b.holds();
    report::CsvTable t("hypmass.specfun.bounds.v1", {"eps", "y", "lower", "k", "upper", "holds"});
    t.add_row({full(a.eps), full(a.y), full(b.lower), full(b.value), full(b.upper),
               b.holds() ? "true" : "false"});
    return t;
  }
  if (which == "split") {
    const auto sp = specfun::k_split(a.eps, a.y, tol);
    const double k = specfun::mcdonald_k(a.eps, a.y, tol);
    report::CsvTable t("hypmass.specfun.split.v1", {"eps", "y", "c", "d", "k", "split_defect"});
    t.add_row({full(a.eps), full(a.y), full(sp.c), full(sp.d), full(k), full((sp.c + sp.d) / 2 - k)});
    return t;
  }
  const auto param = SpectralParam::from_s(a.s);
  const double radial = specfun::whittaker_radial(param, a.n, a.y, tol);
  const auto mode = specfun::whittaker_mode(param, a.n, a.x, a.y, tol);
  report::CsvTable t("hypmass.specfun.whittaker.v1", {"s", "n", "x", "y", "radial", "re", "im"});
  t.add_row({full(a.s), std::to_string(a.n), full(a.x), full(a.y), full(radial), full(mode.real()),
             full(mode.imag())});
  return t;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + path.string() + "'");
  f << text;
}

int run_verify(const std::string& suite, const RunConfig& config, std::ostream& out) {
  const std::vector<std::string> names =
      suite == "all" ? kSuites : std::vector<std::string>{suite};
  std::filesystem::create_directories(config.out_dir);
  bool pass = true;
  for (const auto& name : names) {
    const auto result = run_suite(name, config);
    for (const auto& t : result.tables) {
      std::ostringstream csv;
      t.table.write(csv);
      write_file(std::filesystem::path(config.out_dir) / (name + "_" + t.name + ".csv"), csv.str());
    }
    const auto json = to_json(result);
    write_file(std::filesystem::path(config.out_dir) / (name + ".json"), json);

    switch (config.format) {
      case OutputFormat::json: out << json; break;
      case OutputFormat::csv:
        for (const auto& t : result.tables) t.table.write(out);
        break;
      case OutputFormat::human:
        out << "suite " << name << ": " << (result.pass() ? "PASS" : "FAIL") << '\n';
        for (const auto& n : result.notes) out << "  " << n << '\n';
        for (const auto& f : result.failures) out << "  FAIL " << f << '\n';
        break;
    }
    pass = pass && result.pass();
  }
  return pass ? kPass : kContractViolation;
}

int run_sweep(const std::string& name, const RunConfig& config, std::ostream& out) {
  const auto table = name == "degeneration" ? sweep_degeneration(config)
                     : name == "constants"  ? sweep_constants(config)
                                            : sweep_tail_ratio(config);
  const OutputFormat format = config.format == OutputFormat::human ? OutputFormat::csv : config.format;
  if (config.out_file) {
    std::ostringstream text;
    emit(table, format, text);
    write_file(*config.out_file, text.str());
  } else {
    emit(table, format, out);
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mass bounds for small-eigenvalue eigenfunctions on hyperbolic surfaces", "hypmass"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::string config_path;
  std::string format = "human";
  Overrides overrides;
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key = value config file")->check(CLI::ExistingFile);
    sub->add_option("--format", format, "csv, json or human")
        ->check(CLI::IsMember({"csv", "json", "human"}));
  };

  auto* specfun = app.add_subcommand("specfun", "Single special-function evaluations");
  specfun->require_subcommand(1);
  SpecfunArgs sa;
  std::string specfun_cmd;
  for (const auto& [name, help] :
       {std::pair{"k", "McDonald function K_eps(y)"}, std::pair{"bounds", "two-sided bound on K_eps(y)"},
        std::pair{"split", "central and tail pieces c, d of K_eps(y)"},
        std::pair{"whittaker", "Whittaker mode W_s(nz)"}}) {
    auto* sub = specfun->add_subcommand(name, help);
    common(sub);
    sub->callback([&specfun_cmd, n = std::string(name)] { specfun_cmd = n; });
    if (std::string(name) == "whittaker") {
      sub->add_option("--s", sa.s, "spectral parameter s in [1/2, 1]")->required();
      sub->add_option("--n", sa.n, "Fourier index n != 0")->required();
      sub->add_option("--x", sa.x, "horizontal coordinate");
    } else {
      sub->add_option("--eps", sa.eps, "order eps")->required();
    }
    sub->add_option("--y", sa.y, "argument y > 0")->required();
  }

  auto* verify = app.add_subcommand("verify", "Run verification suites and write reports");
  std::string suite;
  verify->add_option("suite", suite, "cusp, collar, tail, nodal or all")
      ->required()
      ->check(CLI::IsMember({"cusp", "collar", "tail", "nodal", "all"}));
  common(verify);
  overrides.bind(verify, "--lambda", "lambda", "eigenvalue in [0, 1/4]");
  overrides.bind(verify, "--lgamma", "lgamma", "length of the core geodesic");
  overrides.bind(verify, "--eps", "eps", "thin-part threshold");
  overrides.bind(verify, "--eta", "eta", "spectral gap 1/4 - lambda lower bound ('none' to skip)");
  overrides.bind(verify, "--eps0", "eps0", "outer threshold (default Margulis 0.5)");
  overrides.bind(verify, "--jmax", "jmax", "largest Fourier mode");
  overrides.bind(verify, "--input", "nodal_input", "nodal decomposition file");
  overrides.bind(verify, "--out-dir", "out_dir", "report directory");

  auto* sweep = app.add_subcommand("sweep", "Emit a parameter sweep as CSV");
  std::string sweep_name;
  sweep->add_option("name", sweep_name, "degeneration, constants or tail-ratio")
      ->required()
      ->check(CLI::IsMember({"degeneration", "constants", "tail-ratio"}));
  common(sweep);
  overrides.bind(sweep, "--l", "schedule", "l_gamma schedule (comma separated, decreasing)");
  overrides.bind(sweep, "--r", "r_shifted", "shifted radii (comma separated)");
  overrides.bind(sweep, "--j", "potential_j", "Fourier mode of the potential sweep");
  overrides.bind(sweep, "--eps", "constants_eps", "eps schedule (comma separated)");
  overrides.bind(sweep, "--eta", "eta", "spectral gap");
  overrides.bind(sweep, "--eps0", "eps0", "outer threshold");
  overrides.bind(sweep, "--lgamma", "lgamma", "length of the core geodesic");
  overrides.bind(sweep, "--lambda", "lambda", "eigenvalue");
  overrides.bind(sweep, "--b", "cusp_b", "cusp heights (comma separated)");
  overrides.bind(sweep, "--out", "out", "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  try {
    RunConfig config;
    resolve_tolerances(config);
    if (!config_path.empty()) config = load_run_config(config_path, config);
    if (app.got_subcommand(verify) || app.got_subcommand(sweep)) {
      for (const auto& [key, value] : overrides.values) apply_config_key(config, key, value);
    }
    config.format = parse_format(format);
    config.validate();

    if (app.got_subcommand(specfun)) {
      config.command = "specfun " + specfun_cmd;
      bool ok = true;
      const auto table = specfun_table(specfun_cmd, sa, config.tol, ok);
      emit(table, config.format, out);
      return ok ? kPass : kContractViolation;
    }
    if (app.got_subcommand(verify)) {
      config.command = "verify " + suite;
      return run_verify(suite, config, out);
    }
    config.command = "sweep " + sweep_name;
    return run_sweep(sweep_name, config, out);
  } catch (const ConfigError& e) {
    err << "hypmass: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "hypmass: " << e.what() << '\n';
    return kUsageError;
  } catch (const QuadratureError& e) {
    err << "hypmass: numerical failure: " << e.what() << " (error estimate " << e.achieved_error()
        << ")\n";
    return kNumericalError;
  } catch (const IntegrationError& e) {
    err << "hypmass: numerical failure: " << e.what() << " (at r = " << e.failing_r() << ")\n";
    return kNumericalError;
  } catch (const std::exception& e) {
    err << "hypmass: " << e.what() << '\n';
    return kNumericalError;
  }
}

}  // namespace hypmass::cli
