#pragma once

// Order-of-magnitude admissibility of a prescribed motion: energy radiated by
// the accelerated charge compared with its kinetic energy.

#include "rdi/catalog.hpp"
#include "rdi/constants.hpp"

namespace rdi {

inline constexpr double kRadiationRatioThreshold = 1e-3;

struct PhysicalityVerdict {
  bool superluminal = false;
  Real radiated_energy{0};  ///< J
  Real kinetic_energy{0};   ///< J
  Real ratio{0};            ///< radiated / kinetic, 0 when nothing moves
  bool pass = false;
};

/// Larmor power e^2 alpha^2 / (6 pi epsilon0 c^3) for proper acceleration alpha.
Real larmor_power(const Real& proper_acceleration, const PhysicalConstants& k);

/// Loss per revolution of the rotating packet against its kinetic energy.
/// Throws ParameterError when r0 |omega| >= c.
PhysicalityVerdict synchrotron_check(const RotationScenario& s, const PhysicalConstants& k,
                                     double threshold = kRadiationRatioThreshold);

/// Loss integrated over [0, duration] against the kinetic energy at peak speed.
/// Throws ParameterError when the trajectory reaches c on that interval.
PhysicalityVerdict bremsstrahlung_check(const TranslationScenario& s, const Real& duration,
                                        const PhysicalConstants& k,
                                        double threshold = kRadiationRatioThreshold);

}  // namespace rdi
