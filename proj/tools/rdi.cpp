#include "rdi/catalog.hpp"
#include "rdi/config.hpp"
#include "rdi/physicality.hpp"
#include "rdi/sweep.hpp"
#include "rdi/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

namespace {

using nlohmann::ordered_json;

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kConfigError = 2,
  kNonPhysical = 3,
  kNumericalFailure = 4,
  kVerificationFailed = 5,
};

struct Options {
  std::string config;
  std::string preset;
  std::string out = ".";
  int threads = 0;
  bool json = false;
};

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("RDI_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n < 1 || n > 1024)
      throw rdi::ConfigError("RDI_THREADS must be a positive integer");
    return static_cast<int>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

rdi::ScenarioConfig load(const Options& o) {
  if (!o.config.empty() && !o.preset.empty())
    throw rdi::ConfigError("--config and --preset are mutually exclusive");
  if (!o.preset.empty()) return rdi::preset_config(o.preset);
  if (o.config.empty()) throw rdi::ConfigError("either --config or --preset is required");
  return rdi::load_config(o.config);
}

std::filesystem::path output_dir(const Options& o) {
  std::filesystem::path dir(o.out);
  std::filesystem::create_directories(dir);
  return dir;
}

double number(const rdi::Real& x) { return rdi::to_double(x); }

ordered_json physicality_summary(const rdi::ScenarioConfig& cfg) {
  const rdi::PhysicalConstants& k = cfg.constants;
  auto to_json = [](const rdi::PhysicalityVerdict& v) {
    return ordered_json{{"superluminal", v.superluminal},
                        {"radiated_energy", number(v.radiated_energy)},
                        {"kinetic_energy", number(v.kinetic_energy)},
                        {"ratio", number(v.ratio)},
                        {"pass", v.pass}};
  };
  if (cfg.scenario == "rotation")
    return to_json(rdi::synchrotron_check(
        {cfg.parameter("r0"), rdi::rotation_frequency(cfg), cfg.parameter("B0")}, k));
  if ((cfg.scenario == "translation" || cfg.scenario == "translation-unnormalized") &&
      !cfg.state_expression("trajectory"))
    return to_json(rdi::bremsstrahlung_check(
        rdi::TranslationScenario::sinusoidal(cfg.parameter("L"), cfg.parameter("T"),
                                             cfg.parameter("B0")),
        cfg.parameter("T"), k));
  return nullptr;
}

int cmd_invert(const Options& o) {
  const rdi::ScenarioConfig cfg = load(o);
  const rdi::StateParametrization state = rdi::build_state(cfg);
  const ordered_json physicality = physicality_summary(cfg);
  const int threads = resolve_threads(o.threads);
  const rdi::Real kappa = cfg.has_parameter("kappa") ? cfg.parameter("kappa") : rdi::Real(0);
  const rdi::SweepResult result =
      rdi::run_sweep(state, cfg.grid, cfg.interaction, kappa, cfg.tolerances, threads);

  const auto dir = output_dir(o);
  {
    std::ofstream csv(dir / cfg.csv);
    if (!csv) throw rdi::ConfigError("cannot write " + (dir / cfg.csv).string());
    rdi::write_csv(csv, result);
  }

  const auto& s = result.summary;
  int code = kOk;
  std::string status = "ok";
  if (s.nonphysical > 0) {
    code = kNonPhysical;
    status = "non-physical";
  } else if (s.failed > 0) {
    code = kNumericalFailure;
    status = "numerical-failure";
  }
  ordered_json summary = {
      {"scenario", cfg.scenario},
      {"interaction", cfg.interaction == rdi::Interaction::Scalar ? "scalar" : "electromagnetic"},
      {"points", s.points},
      {"nonphysical_points", s.nonphysical},
      {"failed_points", s.failed},
      {"max_hermiticity_residual", s.max_hermiticity_residual},
      {cfg.interaction == rdi::Interaction::Scalar ? "max_scalar_residual" : "max_dirac_residual",
       s.max_dirac_residual},
      {"tolerances",
       {{"hermiticity", cfg.tolerances.hermiticity}, {"dirac", cfg.tolerances.dirac}}},
      {"physicality", physicality},
      {"csv", cfg.csv},
      {"status", status},
  };
  std::ofstream(dir / cfg.summary) << summary.dump(2) << '\n';
  std::cout << summary.dump(2) << '\n';
  if (code == kNonPhysical)
    std::cerr << "rdi: prescribed dynamics is not reachable (max Hermiticity residual "
              << s.max_hermiticity_residual << ")\n";
  return code;
}

int cmd_verify(const Options& o) {
  const rdi::ScenarioConfig cfg = load(o);
  const std::vector<rdi::Check> checks = rdi::verify(cfg, resolve_threads(o.threads));
  ordered_json report = ordered_json::array();
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.pass;
    ordered_json entry = {{"check", c.name},
                          {"pass", c.pass},
                          {"value", c.value},
                          {"tolerance", c.tolerance}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    report.push_back(entry);
  }
  const ordered_json doc = {{"scenario", cfg.scenario}, {"pass", all}, {"checks", report}};
  if (o.out != ".") std::ofstream(output_dir(o) / "verify.json") << doc.dump(2) << '\n';
  std::cout << doc.dump(2) << '\n';
  return all ? kOk : kVerificationFailed;
}

int cmd_catalog(const Options& o) {
  const auto& entries = rdi::catalog_entries();
  if (o.json) {
    ordered_json list = ordered_json::array();
    for (const auto& e : entries)
      list.push_back({{"name", e.name},
                      {"description", e.description},
                      {"parameters", e.parameters},
                      {"closed_forms", e.closed_forms}});
    ordered_json presets = rdi::preset_names();
    std::cout << ordered_json{{"scenarios", list}, {"presets", presets}}.dump(2) << '\n';
    return kOk;
  }
  for (const auto& e : entries) {
    std::cout << e.name << "\n  " << e.description << "\n  parameters:";
    for (const auto& p : e.parameters) std::cout << ' ' << p;
    if (e.parameters.empty()) std::cout << " none";
    std::cout << "\n  closed forms: " << e.closed_forms << '\n';
  }
  std::cout << "presets:";
  for (const auto& p : rdi::preset_names()) std::cout << ' ' << p;
  std::cout << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relativistic dynamical inversion: potentials that steer Dirac wave packets"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", o.config, "scenario configuration file");
    cmd->add_option("--preset", o.preset, "built-in configuration")
        ->check(CLI::IsMember(rdi::preset_names()));
    cmd->add_option("--out", o.out, "output directory");
    cmd->add_option("--threads", o.threads, "worker threads (default: RDI_THREADS or all cores)")
        ->check(CLI::Range(1, 1024));
  };
  CLI::App* invert = app.add_subcommand("invert", "invert the potential over the grid");
  CLI::App* verify = app.add_subcommand("verify", "run the self-checks of a scenario");
  CLI::App* catalog = app.add_subcommand("catalog", "list the built-in scenarios");
  add_common(invert);
  add_common(verify);
  catalog->add_flag("--json", o.json, "machine-readable listing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (invert->parsed()) return cmd_invert(o);
    if (verify->parsed()) return cmd_verify(o);
    return cmd_catalog(o);
  } catch (const rdi::ConfigError& e) {
    std::cerr << "rdi: config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const rdi::ParameterError& e) {
    std::cerr << "rdi: invalid parameters: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "rdi: " << e.what() << '\n';
    return kNumericalFailure;
  }
}
