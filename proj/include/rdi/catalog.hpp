#pragma once

// Closed-form potentials, fields and currents of the exactly solvable
// scenarios, transcribed term by term so they can serve as oracles for the
// generic inversion engine.
//
// Quantities carry the charge: e A^mu (contravariant, kg m / s), e E (N),
// e B (kg / s), mu0 e J (kg / (m^2 s)).

#include "rdi/constants.hpp"
#include "rdi/profile.hpp"
#include "rdi/state.hpp"

#include <array>
#include <string>
#include <vector>

namespace rdi {

using Vec3 = std::array<Real, 3>;
using Vec4 = std::array<Real, 4>;

struct ClosedForm {
  Vec4 ea;       ///< e A^mu
  Vec3 ee;       ///< e E
  Vec3 eb;       ///< e B
  Vec3 mu0_e_j;  ///< mu0 e J
};

// --- rotation --------------------------------------------------------------

struct RotationScenario {
  Real r0, omega, b0;

  Real speed(const PhysicalConstants& k) const;
  Real gamma(const PhysicalConstants& k) const;
  void validate(const PhysicalConstants& k) const;
};

ClosedForm rotation_closed_form(const RotationScenario& s, const SpacetimePoint& p,
                                const PhysicalConstants& k);
/// e E in the limit hbar -> 0.
Vec3 rotation_classical_field(const RotationScenario& s, const SpacetimePoint& p,
                              const PhysicalConstants& k);
/// e E and B in the limit c -> infinity.
Vec3 rotation_nonrelativistic_field(const RotationScenario& s, const SpacetimePoint& p,
                                    const PhysicalConstants& k);
/// e |E - E_classical| = gamma r0 omega^3 hbar / (2 c^2).
Real rotation_quantum_gap(const RotationScenario& s, const PhysicalConstants& k);
/// |mu0 e J|^2 in closed form.
Real rotation_current_amplitude_sq(const RotationScenario& s, const SpacetimePoint& p,
                                   const PhysicalConstants& k);
/// Dirac current Tr(Psi Psi^dagger sigma_mu) / 2 of the unnormalized Gaussian.
Vec4 rotation_dirac_current(const RotationScenario& s, const SpacetimePoint& p,
                            const PhysicalConstants& k);

/// Frequency at which the rotation current amplitude is time independent.
Real resonant_frequency(const Real& b0, const PhysicalConstants& k);
/// omega0 - (-omega_c + omega_c^2 hbar / (2 m c^2)); O(hbar^2).
Real cyclotron_expansion_residual(const Real& b0, const PhysicalConstants& k);
/// Third-order series of omega0 in hbar.
Real cyclotron_expansion(const Real& b0, const PhysicalConstants& k, int order);

// --- translation -----------------------------------------------------------

struct TranslationScenario {
  Profile trajectory;  ///< Y(t)
  Real b0;

  /// The sinusoidal path Y(t) = (L/2)(1 + sin(pi (t - T/2) / T)).
  static TranslationScenario sinusoidal(const Real& length, const Real& duration, const Real& b0);
};

ClosedForm translation_closed_form(const TranslationScenario& s, const SpacetimePoint& p,
                                   const PhysicalConstants& k);
/// e E for hbar -> 0.
Vec3 translation_classical_field(const TranslationScenario& s, const SpacetimePoint& p,
                                 const PhysicalConstants& k);
/// (hbar / 2 c^2) d/dt (gamma Y''), the expected e E1_classical - e E1.
Real translation_quantum_gap(const TranslationScenario& s, const Real& t,
                             const PhysicalConstants& k);
/// Nonrelativistic e E of the sinusoidal path.
Vec3 translation_nonrelativistic_field(const Real& length, const Real& duration, const Real& b0,
                                       const Real& t, const PhysicalConstants& k);
/// Leading low-energy terms (e B0 Y'' / c^2, -m Y''' / c^2, 0) of mu0 e J.
Vec3 translation_low_energy_current(const TranslationScenario& s, const Real& t,
                                    const PhysicalConstants& k);

// --- confined states -------------------------------------------------------

/// e A_0 of the stationary confined state with profile f at height z (energy zero).
Real confined_3d_potential(const Profile& f, const Real& z, const PhysicalConstants& k);
/// e A_0 for f(z) = sqrt(xi^2 + z^2).
Real soft_coulomb(const Real& xi, const Real& z, const PhysicalConstants& k);

struct Rotation3dScenario {
  Real r0, omega, b0;
  Profile profile;
};

/// e A^mu of the rotating confined state. Only the vector part agrees with the
/// engine; the time component is dimensionally inconsistent and kept for reference.
Vec4 rotation_3d_potential(const Rotation3dScenario& s, const SpacetimePoint& p,
                           const PhysicalConstants& k);

// --- scalar interactions ---------------------------------------------------

/// V(z) holding the beta = arctan(z / xi) state without electromagnetic fields.
Real scalar_potential(const Real& xi, const Real& energy, const Real& z,
                      const PhysicalConstants& k);
/// V(z) of the beta = pi/2 state with nonlinear coupling kappa.
Real nonlinear_scalar_potential(const Real& xi, const Real& kappa, const Real& z,
                                const PhysicalConstants& k);

// --- boosts ----------------------------------------------------------------

struct BoostedFields {
  Vec3 e;  ///< V / m
  Vec3 b;  ///< T
};

/// Fields of the Landau state boosted along y with proper velocity u2.
BoostedFields boosted_landau_fields(const Real& u2, const Real& b0, const PhysicalConstants& k);

// --- listing ---------------------------------------------------------------

struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<std::string> parameters;
  std::string closed_forms;  ///< oracles available for the scenario
};

const std::vector<CatalogEntry>& catalog_entries();

}  // namespace rdi
