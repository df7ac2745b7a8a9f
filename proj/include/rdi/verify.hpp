#pragma once

// Self-checks of a configured scenario: engine against closed forms, field
// identities, limits, resonance and physicality, derivatives against finite
// differences.

#include "rdi/catalog.hpp"
#include "rdi/config.hpp"

#include <array>
#include <string>
#include <vector>

namespace rdi {

inline constexpr double kHomogeneousTolerance = 1e-12;
inline constexpr double kOracleTolerance = 1e-9;
inline constexpr double kCurrentTolerance = 1e-6;
inline constexpr double kLimitTolerance = 1e-6;
inline constexpr double kResonanceTolerance = 1e-6;

struct Check {
  std::string name;
  bool pass;
  double value;      ///< worst observed error or residual
  double tolerance;
  std::string detail;
};

/// Largest normwise error between jet derivatives of the state's scalar fields
/// and central finite differences with per-axis steps (in ct, x, y, z).
/// Gradients are compared relative to max(|grad f|, |H| length) and Hessians
/// relative to max(|H|, |grad f| / length), so that a vanishing derivative is
/// measured against the field's own variation over `length`.
double derivative_check(const StateParametrization& state, const SpacetimePoint& p,
                        const std::array<Real, 4>& steps, const Real& length);

/// (max - min) / max of |J^nu| at (x, y, z = 0) sampled over one period.
Real rotation_current_variation(const RotationScenario& s, const Real& x, const Real& y,
                                const PhysicalConstants& k, int samples = 64);

std::vector<Check> verify(const ScenarioConfig& config, int threads);

}  // namespace rdi
