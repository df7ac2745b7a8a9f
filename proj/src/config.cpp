#include "rdi/config.hpp"

#include "rdi/catalog.hpp"
#include "rdi/dsl.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace rdi {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ConfigError("line " + std::to_string(line) + ": " + what);
}

using ConstantTable = std::vector<std::pair<std::string, Real>>;

ConstantTable constant_table(const PhysicalConstants& k) {
  return {{"hbar", k.hbar}, {"c", k.c},           {"e", k.e},
          {"m", k.m},       {"epsilon0", k.epsilon0}, {"pi", real_pi()}};
}

std::set<std::string> names_of(const ConstantTable& table) {
  std::set<std::string> out;
  for (const auto& [name, value] : table) out.insert(name);
  return out;
}

/// Evaluates a coordinate-free expression; `known` lists every identifier it may use.
Real evaluate_constant(const std::string& source, const ConstantTable& known, int line) {
  try {
    std::set<std::string> names = names_of(known);
    const dsl::Expr e = dsl::parse(source, names);
    for (const auto& id : e.identifiers())
      if (dsl::coordinate_names().count(id) && !names.count(id))
        fail(line, "'" + id + "' is a coordinate and cannot appear here");
    dsl::Bindings<0> b;
    for (const auto& [name, value] : known) b[name] = Jet<Real, 0>(value);
    return dsl::evaluate(e, b).value();
  } catch (const SyntaxError& err) {
    fail(line, err.what());
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& err) {
    fail(line, err.what());
  }
}

std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

GridAxis parse_axis(const std::string& value, const ConstantTable& known, int line) {
  GridAxis axis;
  const std::string v = trim(value);
  if (v.rfind("range(", 0) == 0 && v.back() == ')') {
    const auto args = split_top_level(std::string_view(v).substr(6, v.size() - 7));
    if (args.size() != 3) fail(line, "range takes (min, max, count)");
    const Real lo = evaluate_constant(args[0], known, line);
    const Real hi = evaluate_constant(args[1], known, line);
    const Real n = evaluate_constant(args[2], known, line);
    if (!(n >= 1) || n != boost::multiprecision::round(n) || n > Real(1e7))
      fail(line, "grid count must be a positive integer");
    const int count = static_cast<int>(n);
    if (count > 1 && !(hi > lo)) fail(line, "range requires max > min");
    for (int i = 0; i < count; ++i)
      axis.samples.push_back(count == 1 ? lo : lo + (hi - lo) * Real(i) / Real(count - 1));
  } else {
    for (const auto& item : split_top_level(v)) {
      if (item.empty()) fail(line, "empty grid sample");
      axis.samples.push_back(evaluate_constant(item, known, line));
    }
  }
  return axis;
}

double parse_tolerance(const std::string& value, int line) {
  const Real v = evaluate_constant(value, {}, line);
  if (!(v > 0)) fail(line, "tolerances must be positive");
  return to_double(v);
}

const std::set<std::string>& state_keys() {
  static const std::set<std::string> keys = {
      "log_rho", "rho",    "u1",         "u2",     "u3",         "theta1",
      "theta2",  "theta3", "beta",       "energy", "spin_phase", "trajectory",
      "profile", "log_density_normalization"};
  return keys;
}

// ---------------------------------------------------------------------------
// DSL-backed states

ConstantTable all_constants(const ScenarioConfig& cfg) {
  ConstantTable known = constant_table(cfg.constants);
  for (const auto& p : cfg.parameters) known.push_back(p);
  return known;
}

std::set<std::string> parameter_names(const ScenarioConfig& cfg) {
  std::set<std::string> out;
  for (const auto& [name, value] : cfg.parameters) out.insert(name);
  return out;
}

dsl::Expr parse_state(const ScenarioConfig& cfg, const std::string& key,
                      const std::set<std::string>& allowed_coordinates) {
  const std::string* src = cfg.state_expression(key);
  try {
    dsl::Expr e = dsl::parse(*src, parameter_names(cfg));
    for (const auto& id : e.identifiers())
      if (dsl::coordinate_names().count(id) && !allowed_coordinates.count(id))
        throw ConfigError("state." + key + " may not depend on '" + id + "'");
    return e;
  } catch (const SyntaxError& err) {
    throw ConfigError("state." + key + ": " + err.what());
  }
}

ScalarField field_of(const dsl::Expr& e, const ScenarioConfig& cfg, bool take_log = false) {
  auto fixed = std::make_shared<dsl::Bindings<3>>();
  for (const auto& [name, value] : all_constants(cfg)) (*fixed)[name] = StateJet(value);
  const Real c = cfg.constants.c;
  return [e, fixed, c, take_log](const Coords& x) {
    dsl::Bindings<3> b = *fixed;
    b["t"] = x[0] / c;
    b["x"] = x[1];
    b["y"] = x[2];
    b["z"] = x[3];
    const StateJet v = dsl::evaluate(e, b);
    return take_log ? log(v) : v;
  };
}

Profile profile_of(const ScenarioConfig& cfg, const std::string& key, const std::string& var) {
  const dsl::Expr e = parse_state(cfg, key, {var});
  auto fixed = std::make_shared<dsl::Bindings<4>>();
  for (const auto& [name, value] : all_constants(cfg)) (*fixed)[name] = Profile::Jet4(value);
  return Profile(e.to_string(), [e, fixed, var](const Profile::Jet4& s) {
    dsl::Bindings<4> b = *fixed;
    b[var] = s;
    return dsl::evaluate(e, b);
  });
}

StateParametrization custom_state(const ScenarioConfig& cfg) {
  cfg.constants.validate();
  const std::set<std::string> spacetime = dsl::coordinate_names();
  StateParametrization s;
  s.name = "custom";
  s.constants = cfg.constants;
  if (cfg.state_expression("log_rho"))
    s.log_rho = field_of(parse_state(cfg, "log_rho", spacetime), cfg);
  else if (cfg.state_expression("rho"))
    s.log_rho = field_of(parse_state(cfg, "rho", spacetime), cfg, true);
  else
    throw ConfigError("custom state needs state.log_rho or state.rho");
  for (int i = 0; i < 3; ++i) {
    const std::string u = "u" + std::to_string(i + 1);
    const std::string th = "theta" + std::to_string(i + 1);
    if (cfg.state_expression(u)) s.velocity[i] = field_of(parse_state(cfg, u, spacetime), cfg);
    if (cfg.state_expression(th)) s.angles[i] = field_of(parse_state(cfg, th, spacetime), cfg);
  }
  if (cfg.state_expression("beta")) s.beta = field_of(parse_state(cfg, "beta", spacetime), cfg);
  if (cfg.state_expression("spin_phase"))
    s.spin_phase = field_of(parse_state(cfg, "spin_phase", spacetime), cfg);
  const ConstantTable known = all_constants(cfg);
  if (const std::string* src = cfg.state_expression("energy"))
    s.energy = evaluate_constant(*src, known, 0);
  if (const std::string* src = cfg.state_expression("log_density_normalization"))
    s.log_density_normalization = evaluate_constant(*src, known, 0);
  return s;
}

// ---------------------------------------------------------------------------
// Presets

const std::map<std::string, std::string, std::less<>>& preset_sources() {
  static const std::map<std::string, std::string, std::less<>> presets = {
      {"fig1", R"(scenario = rotation
[parameters]
r0 = 2e-6
omega = -61.55e9
B0 = 0.35
[grid]
t = 0
x = range(-4e-6, 4e-6, 41)
y = range(-4e-6, 4e-6, 41)
z = 0
[output]
csv = fig1.csv
summary = fig1.json
)"},
      {"fig2", R"(scenario = translation
[parameters]
L = 10e-6
T = 1e-9
B0 = 1
[grid]
t = 0, 0.505e-9
x = range(-4e-6, 4e-6, 41)
y = range(-4e-6, 14e-6, 41)
z = 0
[output]
csv = fig2.csv
summary = fig2.json
)"},
      {"soft-coulomb", R"(scenario = soft-coulomb
[parameters]
xi = 1e-12
B0 = 1
[grid]
t = 0
x = 0
y = 0
z = range(-5*xi, 5*xi, 41)
[output]
csv = soft-coulomb.csv
summary = soft-coulomb.json
)"},
      {"scalar", R"(scenario = scalar
[parameters]
xi = 1e-12
energy = 0.5*m*c^2
[grid]
t = 0
x = 0
y = 0
z = range(-5*xi, 5*xi, 41)
[output]
csv = scalar.csv
summary = scalar.json
)"},
      {"nonlinear", R"(scenario = nonlinear
[parameters]
xi = 1e-12
kappa = m*c^2*xi
[grid]
t = 0
x = 0
y = 0
z = range(-5*xi, 5*xi, 41)
[output]
csv = nonlinear.csv
summary = nonlinear.json
)"},
      {"boosted-landau", R"(scenario = boosted-landau
[parameters]
u2 = 0.3
B0 = 1
[grid]
t = 0, 1e-12
x = range(-1e-7, 1e-7, 21)
y = range(-1e-7, 1e-7, 21)
z = 0
[output]
csv = boosted-landau.csv
summary = boosted-landau.json
)"},
      {"broken-translation", R"(scenario = translation-unnormalized
[constants]
units = natural
[parameters]
L = 2
T = 4
B0 = 1
[grid]
t = range(0.3, 3.7, 6)
x = range(-1, 1, 5)
y = range(-1, 3, 5)
z = 0
[output]
csv = broken-translation.csv
summary = broken-translation.json
)"},
  };
  return presets;
}

Profile translation_path(const ScenarioConfig& cfg) {
  if (cfg.state_expression("trajectory")) return profile_of(cfg, "trajectory", "t");
  return sinusoidal_trajectory(cfg.parameter("L"), cfg.parameter("T"));
}

Real parameter_or(const ScenarioConfig& cfg, std::string_view name, const Real& fallback) {
  return cfg.has_parameter(name) ? cfg.parameter(name) : fallback;
}

}  // namespace

Real rotation_frequency(const ScenarioConfig& cfg) {
  if (cfg.has_parameter("omega")) return cfg.parameter("omega");
  return resonant_frequency(cfg.parameter("B0"), cfg.constants);
}

Profile confinement_profile(const ScenarioConfig& cfg) {
  if (cfg.state_expression("profile")) return profile_of(cfg, "profile", "z");
  if (cfg.has_parameter("xi")) return soft_core_profile(cfg.parameter("xi"));
  throw ConfigError("scenario '" + cfg.scenario + "' needs state.profile or parameter xi");
}

const ConfigSection::Entry* ConfigSection::find(std::string_view key) const {
  for (const auto& e : entries)
    if (e.key == key) return &e;
  return nullptr;
}

ConfigDocument parse_config_text(std::string_view text) {
  ConfigDocument doc;
  std::string current;
  doc[current];
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "unterminated section header");
      current = trim(std::string_view(line).substr(1, line.size() - 2));
      if (current.empty()) fail(line_no, "empty section name");
      doc[current];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key = value");
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) fail(line_no, "missing key");
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    auto& section = doc[current];
    if (section.find(key)) fail(line_no, "duplicate key '" + key + "'");
    section.entries.push_back({key, value, line_no});
  }
  return doc;
}

std::size_t Grid::size() const {
  return t.samples.size() * x.samples.size() * y.samples.size() * z.samples.size();
}

SpacetimePoint Grid::point(std::size_t index) const {
  const std::size_t nx = x.samples.size(), ny = y.samples.size(), nz = z.samples.size();
  const std::size_t ix = index % nx;
  index /= nx;
  const std::size_t iy = index % ny;
  index /= ny;
  const std::size_t iz = index % nz;
  const std::size_t it = index / nz;
  return {t.samples[it], x.samples[ix], y.samples[iy], z.samples[iz]};
}

const Real& ScenarioConfig::parameter(std::string_view name) const {
  for (const auto& p : parameters)
    if (p.first == name) return p.second;
  throw ConfigError("scenario '" + scenario + "' requires parameter '" + std::string(name) + "'");
}

bool ScenarioConfig::has_parameter(std::string_view name) const {
  return std::any_of(parameters.begin(), parameters.end(),
                     [&](const auto& p) { return p.first == name; });
}

const std::string* ScenarioConfig::state_expression(std::string_view key) const {
  for (const auto& s : state)
    if (s.first == key) return &s.second;
  return nullptr;
}

ScenarioConfig parse_config(std::string_view text) {
  const ConfigDocument doc = parse_config_text(text);
  ScenarioConfig cfg;
  bool interaction_set = false;

  for (const auto& [name, section] : doc) {
    static const std::set<std::string> known = {"",      "constants",  "parameters", "state",
                                                "grid",  "tolerances", "output"};
    const std::string base = name.substr(0, name.find('.'));
    if (!known.count(base)) {
      const int line = section.entries.empty() ? 0 : section.entries.front().line;
      fail(line, "unknown section [" + name + "]");
    }
  }

  for (const auto& e : doc.at("").entries) {
    if (e.key == "scenario") {
      const auto& names = builtin_scenarios();
      if (e.value != "custom" && std::find(names.begin(), names.end(), e.value) == names.end())
        fail(e.line, "unknown scenario '" + e.value + "'");
      cfg.scenario = e.value;
    } else if (e.key == "interaction") {
      if (e.value == "electromagnetic")
        cfg.interaction = Interaction::Electromagnetic;
      else if (e.value == "scalar")
        cfg.interaction = Interaction::Scalar;
      else
        fail(e.line, "interaction must be electromagnetic or scalar");
      interaction_set = true;
    } else {
      fail(e.line, "unknown key '" + e.key + "'");
    }
  }
  if (!interaction_set && (cfg.scenario == "scalar" || cfg.scenario == "nonlinear"))
    cfg.interaction = Interaction::Scalar;

  for (const auto& [name, section] : doc) {
    if (name.rfind("constants", 0) != 0) continue;
    if (const auto* units = section.find("units")) {
      if (units->value == "si")
        cfg.constants = PhysicalConstants::si();
      else if (units->value == "natural")
        cfg.constants = PhysicalConstants::natural();
      else
        fail(units->line, "units must be si or natural");
    }
    for (const auto& e : section.entries) {
      if (e.key == "units") continue;
      const Real v = evaluate_constant(e.value, constant_table(cfg.constants), e.line);
      if (e.key == "hbar") cfg.constants.hbar = v;
      else if (e.key == "c") cfg.constants.c = v;
      else if (e.key == "e") cfg.constants.e = v;
      else if (e.key == "m") cfg.constants.m = v;
      else if (e.key == "epsilon0") cfg.constants.epsilon0 = v;
      else fail(e.line, "unknown constant '" + e.key + "'");
    }
  }
  try {
    cfg.constants.validate();
  } catch (const ParameterError& err) {
    throw ConfigError(err.what());
  }

  ConstantTable known = constant_table(cfg.constants);
  for (const auto& [name, section] : doc) {
    if (name.rfind("parameters", 0) != 0) continue;
    for (const auto& e : section.entries) {
      if (dsl::coordinate_names().count(e.key) || dsl::constant_names().count(e.key))
        fail(e.line, "parameter '" + e.key + "' shadows a built-in name");
      if (cfg.has_parameter(e.key)) fail(e.line, "duplicate parameter '" + e.key + "'");
      const Real v = evaluate_constant(e.value, known, e.line);
      cfg.parameters.emplace_back(e.key, v);
      known.emplace_back(e.key, v);
    }
  }

  for (const auto& [name, section] : doc) {
    if (name.rfind("state", 0) != 0) continue;
    for (const auto& e : section.entries) {
      if (!state_keys().count(e.key)) fail(e.line, "unknown state key '" + e.key + "'");
      if (cfg.state_expression(e.key)) fail(e.line, "duplicate state key '" + e.key + "'");
      try {
        dsl::parse(e.value, parameter_names(cfg));
      } catch (const SyntaxError& err) {
        fail(e.line, err.what());
      }
      cfg.state.emplace_back(e.key, e.value);
    }
  }

  bool axis_set[4] = {false, false, false, false};
  for (const auto& [name, section] : doc) {
    if (name.rfind("grid", 0) != 0) continue;
    for (const auto& e : section.entries) {
      static const std::string axes = "txyz";
      const auto pos = e.key.size() == 1 ? axes.find(e.key[0]) : std::string::npos;
      if (pos == std::string::npos) fail(e.line, "grid axes are t, x, y, z");
      GridAxis* targets[4] = {&cfg.grid.t, &cfg.grid.x, &cfg.grid.y, &cfg.grid.z};
      *targets[pos] = parse_axis(e.value, known, e.line);
      axis_set[pos] = true;
    }
  }
  for (int i = 0; i < 4; ++i) {
    GridAxis* targets[4] = {&cfg.grid.t, &cfg.grid.x, &cfg.grid.y, &cfg.grid.z};
    if (!axis_set[i]) targets[i]->samples = {Real(0)};
  }

  for (const auto& [name, section] : doc) {
    if (name.rfind("tolerances", 0) == 0) {
      for (const auto& e : section.entries) {
        if (e.key == "hermiticity") cfg.tolerances.hermiticity = parse_tolerance(e.value, e.line);
        else if (e.key == "dirac") cfg.tolerances.dirac = parse_tolerance(e.value, e.line);
        else if (e.key == "derivative") cfg.tolerances.derivative = parse_tolerance(e.value, e.line);
        else fail(e.line, "unknown tolerance '" + e.key + "'");
      }
    } else if (name.rfind("output", 0) == 0) {
      for (const auto& e : section.entries) {
        if (e.value.empty() || e.value.find('/') != std::string::npos)
          fail(e.line, "output names must be plain file names");
        if (e.key == "csv") cfg.csv = e.value;
        else if (e.key == "summary") cfg.summary = e.value;
        else fail(e.line, "unknown output key '" + e.key + "'");
      }
    }
  }
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, src] : preset_sources()) out.push_back(name);
    return out;
  }();
  return names;
}

ScenarioConfig preset_config(std::string_view name) {
  const auto it = preset_sources().find(name);
  if (it == preset_sources().end()) throw ConfigError("unknown preset '" + std::string(name) + "'");
  return parse_config(it->second);
}

const std::vector<std::string>& builtin_scenarios() {
  static const std::vector<std::string> names = {
      "rest",         "rotation",    "translation", "translation-unnormalized",
      "confined-3d",  "soft-coulomb", "rotation-3d", "scalar",
      "nonlinear",    "boosted-landau", "accelerated-boost"};
  return names;
}

StateParametrization build_state(const ScenarioConfig& cfg) {
  const PhysicalConstants& k = cfg.constants;
  const std::string& s = cfg.scenario;
  if (s == "custom") return custom_state(cfg);
  if (s == "rest") return rest_state(k);
  if (s == "rotation") {
    return rotation_state({cfg.parameter("r0"), rotation_frequency(cfg), cfg.parameter("B0")}, k);
  }
  if (s == "translation" || s == "translation-unnormalized") {
    const Profile path = translation_path(cfg);
    const auto& ts = cfg.grid.t.samples;
    Real t0 = *std::min_element(ts.begin(), ts.end());
    Real t1 = *std::max_element(ts.begin(), ts.end());
    if (cfg.has_parameter("T")) {
      t0 = std::min(t0, Real(0));
      t1 = std::max(t1, cfg.parameter("T"));
    }
    if (!(peak_speed(path, t0, t1) < k.c))
      throw ParameterError("trajectory speed reaches c on [" + std::to_string(to_double(t0)) +
                           ", " + std::to_string(to_double(t1)) + "] s");
    return translation_state({path, cfg.parameter("B0")}, k, s == "translation");
  }
  if (s == "confined-3d")
    return confined_3d_state(
        {confinement_profile(cfg), cfg.parameter("B0"), parameter_or(cfg, "energy", Real(0))}, k);
  if (s == "soft-coulomb")
    return confined_3d_state({soft_core_profile(cfg.parameter("xi")), cfg.parameter("B0")}, k);
  if (s == "rotation-3d")
    return rotation_3d_state(
        {cfg.parameter("r0"), rotation_frequency(cfg), cfg.parameter("B0"), confinement_profile(cfg)},
        k);
  if (s == "scalar") return scalar_state(cfg.parameter("xi"), cfg.parameter("energy"), k);
  if (s == "nonlinear") return nonlinear_state(cfg.parameter("xi"), k);
  if (s == "boosted-landau") return boosted_landau(cfg.parameter("u2"), cfg.parameter("B0"), k);
  if (s == "accelerated-boost")
    return accelerated_boost(cfg.parameter("E0"), cfg.parameter("B0"), k);
  throw ConfigError("unknown scenario '" + s + "'");
}

}  // namespace rdi
