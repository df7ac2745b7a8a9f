#pragma once

// Plain-text scenario configuration.
//
//   # comment
//   scenario = rotation          top-level keys precede the first section
//   [constants]
//   units = si                   or natural; hbar, c, e, m, epsilon0 override
//   [parameters]
//   r0 = 2e-6                    expressions in constants and earlier parameters
//   [state]
//   log_rho = -(x^2 + y^2)*e*B0/(2*hbar)
//   [grid]
//   t = 0, 0.505e-9              explicit samples
//   x = range(-4e-6, 4e-6, 41)   inclusive, evenly spaced
//   [tolerances]
//   hermiticity = 1e-8
//   [output]
//   csv = fields.csv
//
// Section names may be dotted ("state.extra") to group keys; keys are unique
// within a section.

#include "rdi/constants.hpp"
#include "rdi/errors.hpp"
#include "rdi/state.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rdi {

/// Ordered key-value pairs of one section, with source line numbers.
struct ConfigSection {
  struct Entry {
    std::string key;
    std::string value;
    int line;
  };
  std::vector<Entry> entries;

  const Entry* find(std::string_view key) const;
};

/// Raw parse: sections by name, "" for the top level.
using ConfigDocument = std::map<std::string, ConfigSection, std::less<>>;

ConfigDocument parse_config_text(std::string_view text);

struct GridAxis {
  std::vector<Real> samples;
};

struct Grid {
  GridAxis t, x, y, z;

  std::size_t size() const;
  /// Row-major with x fastest: index = ((it * nz + iz) * ny + iy) * nx + ix.
  SpacetimePoint point(std::size_t index) const;
  std::size_t row_length() const { return x.samples.size(); }
};

enum class Interaction { Electromagnetic, Scalar };

struct Tolerances {
  double hermiticity = 1e-8;
  double dirac = 1e-9;
  double derivative = 1e-6;
};

struct ScenarioConfig {
  std::string scenario = "custom";
  Interaction interaction = Interaction::Electromagnetic;
  PhysicalConstants constants = PhysicalConstants::si();
  std::vector<std::pair<std::string, Real>> parameters;
  std::vector<std::pair<std::string, std::string>> state;  ///< DSL sources
  Grid grid;
  Tolerances tolerances;
  std::string csv = "fields.csv";
  std::string summary = "summary.json";

  /// Throws ConfigError when absent.
  const Real& parameter(std::string_view name) const;
  bool has_parameter(std::string_view name) const;
  const std::string* state_expression(std::string_view key) const;
};

ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::string& path);

/// Names accepted by `preset_config`.
const std::vector<std::string>& preset_names();
/// Built-in configurations reproducing the figures and catalog examples.
ScenarioConfig preset_config(std::string_view name);

/// Names accepted as `scenario`, besides "custom".
const std::vector<std::string>& builtin_scenarios();

/// omega of a rotation config; the resonant frequency of B0 when omitted.
Real rotation_frequency(const ScenarioConfig& config);
/// f(z) of a confined config: state.profile, or the soft core of parameter xi.
Profile confinement_profile(const ScenarioConfig& config);

/// The state described by the configuration; validates parameter preconditions.
StateParametrization build_state(const ScenarioConfig& config);

}  // namespace rdi
