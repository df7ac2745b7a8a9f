#pragma once

// Relativistic dynamical inversion: the potential that makes a prescribed
// spinor field solve the matrix Dirac equation
//   i c hbar (d-bar Psi) sigma_3 - c e A-bar Psi - m c^2 (Psi-bar)^dagger = 0,
// together with the fields, sources and diagnostics derived from it.
//
// Potentials are kept as e A_mu in momentum units (kg m / s). The covariant
// components are the Pauli coefficients of A-bar, A_mu = Tr(A-bar sigma_mu) / 2;
// the physical vector potential has components A^k = -A_k.

#include "rdi/aps.hpp"
#include "rdi/constants.hpp"
#include "rdi/jet.hpp"
#include "rdi/state.hpp"

#include <array>

namespace rdi {

inline constexpr double kDefaultHermiticityTolerance = 1e-8;
inline constexpr double kDefaultResidualTolerance = 1e-9;
/// Denominator floor of the Hermiticity residual, in units of m c.
inline constexpr double kPotentialFloor = 1e-20;

using PotentialMatrix = Mat2<CJet<Real, 2>>;

struct InversionResult {
  PotentialMatrix ea_bar;       ///< e A-bar, kg m / s
  double hermiticity_residual;  ///< ||anti-Hermitian part|| / ||e A-bar||
};

InversionResult invert_potential(const SpinorField& psi, const PhysicalConstants& k);
InversionResult invert_potential(const StateParametrization& state, const SpacetimePoint& p);

/// Covariant e A_mu as second-order jets.
struct FourPotential {
  std::array<PotentialJet, 4> ea;

  std::array<Real, 4> values() const;
  /// e A^mu = (e A_0, -e A_1, -e A_2, -e A_3).
  std::array<Real, 4> contravariant() const;
};

/// Hermitian part of the inverted potential; throws NonPhysicalDynamicsError
/// when the residual exceeds `tolerance`.
FourPotential hermiticity_gate(const InversionResult& inv,
                               double tolerance = kDefaultHermiticityTolerance);

struct FieldStrength {
  std::array<Real, 3> e;  ///< V / m
  std::array<Real, 3> b;  ///< T
};

/// e E and e B with first derivatives, in N and kg / s.
struct FieldJets {
  std::array<FieldJet, 3> ee;
  std::array<FieldJet, 3> eb;
};

FieldJets field_jets(const FourPotential& a, const PhysicalConstants& k);
FieldStrength field_strength(const FourPotential& a, const PhysicalConstants& k);

/// Source J^nu (A / m^2, J^0 = c times the charge density) of the inhomogeneous
/// Maxwell equations for the fields of `a`.
std::array<Real, 4> maxwell_current(const FourPotential& a, const PhysicalConstants& k);

/// Scale-relative violations of div B = 0 and curl E + dB/dt = 0.
struct HomogeneousMaxwell {
  Real divergence_b;
  Real faraday;
};
HomogeneousMaxwell homogeneous_maxwell(const FourPotential& a, const PhysicalConstants& k);

/// ||i c hbar (d-bar Psi) sigma_3 - c e A-bar Psi - m c^2 (Psi-bar)^dagger|| / (m c^2 ||Psi||)
/// for covariant e A_mu given in kg m / s.
Real dirac_residual(const SpinorField& psi, const std::array<Real, 4>& ea,
                    const PhysicalConstants& k);

struct DiracCurrent {
  std::array<Real, 4> j;  ///< Tr(Psi Psi^dagger sigma_mu)
  std::array<Real, 3> v;  ///< c J^k / J^0, m / s
  bool superluminal;
};
DiracCurrent dirac_current(const SpinorField& psi, const PhysicalConstants& k);

struct ScalarInversion {
  Real v;         ///< scalar potential, J
  Real residual;  ///< size of the non-scalar remainder relative to m c^2
};

/// Solves (i c hbar d-bar Psi sigma_3) Psi^-1 = (m c^2 + V + kappa |psi|^2) Psi-bar^dagger Psi^-1
/// for a real scalar V. |psi|^2 uses the state's density normalization.
ScalarInversion scalar_inversion(const StateParametrization& state, const SpacetimePoint& p,
                                 const Real& kappa);

struct ScenarioReport {
  SpacetimePoint point;
  std::array<Real, 4> ea;  ///< covariant, kg m / s
  double hermiticity_residual;
  FieldStrength fields;
  std::array<Real, 4> maxwell_current;
  DiracCurrent dirac;
  Real dirac_residual;
};

/// Full inversion at one point. Throws NonPhysicalDynamicsError when the gate fails.
ScenarioReport analyze(const StateParametrization& state, const SpacetimePoint& p,
                       double hermiticity_tolerance = kDefaultHermiticityTolerance);

}  // namespace rdi
