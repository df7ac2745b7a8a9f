#pragma once

// Differentiable spinor fields Psi(t, x, y, z) built from the factorization
//   Psi = sqrt(rho) e^{i beta/2} B(u) R(theta) exp(-i phi sigma_3),
// with phi = energy * t / hbar plus an optional spacetime-dependent phase.
//
// Fields are evaluated in log form, Psi = exp(s) L, because the Gaussian
// envelopes of laboratory-scale states underflow any floating-point format a
// few widths away from their centre while the inversion only needs
// derivatives of s and L.

#include "rdi/aps.hpp"
#include "rdi/complex_jet.hpp"
#include "rdi/constants.hpp"
#include "rdi/jet.hpp"
#include "rdi/profile.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>

namespace rdi {

/// Seeded coordinate jets (ct, x, y, z).
using Coords = std::array<StateJet, kSpacetimeDims>;
using ScalarField = std::function<StateJet(const Coords&)>;

/// SI event (t, x, y, z).
struct SpacetimePoint {
  Real t, x, y, z;
};

/// Psi = exp(log_prefactor) * core * exp(-i phase sigma_3), all carried to third order.
///
/// The spin phase is kept apart from the core: for moving packets it grows like
/// m c^2 t / hbar, and its contribution to the inversion is exactly hbar d_mu phase.
struct SpinorField {
  CJet<Real, 3> log_prefactor;
  Mat2<CJet<Real, 3>> core;
  StateJet phase;

  /// Psi itself (may underflow far from the packet).
  Mat2<Cx<Real>> value() const;
};

struct StateParametrization {
  std::string name;
  PhysicalConstants constants;

  ScalarField log_rho;                 ///< ln rho; required
  std::array<ScalarField, 3> velocity;  ///< proper velocity u^k; empty entries are zero
  std::array<ScalarField, 3> angles;    ///< rotation angles theta^k (rad); empty entries are zero
  ScalarField beta;                    ///< Yvon-Takabayashi angle (rad); empty is zero
  Real energy{0};                      ///< epsilon in exp(-i epsilon t sigma_3 / hbar), J
  ScalarField spin_phase;              ///< extra phi added to epsilon t / hbar; empty is zero

  /// ln of the factor turning Tr(Psi Psi^dagger)/2 into the normalized density
  /// used by the nonlinear term.
  std::optional<Real> log_density_normalization;
};

Coords seed_coordinates(const SpacetimePoint& p, const PhysicalConstants& k);

/// Evaluates the state and its derivatives through third order at `p`.
SpinorField evaluate_state(const StateParametrization& param, const SpacetimePoint& p);

/// exp(-i phi sigma_3) as a matrix.
template <class R>
Mat2<ComplexOf<R>> spin_phase_matrix(const R& phi) {
  using std::cos;
  using std::sin;
  using C = ComplexOf<R>;
  const R c = cos(phi), s = sin(phi);
  return {C(c, -s), C(R(0)), C(R(0)), C(c, s)};
}

// ---------------------------------------------------------------------------
// Scenario builders

/// Free particle at rest, spin up: exp(-i m c^2 t sigma_3 / hbar).
StateParametrization rest_state(const PhysicalConstants& k);

struct RotationParams {
  Real r0;     ///< m
  Real omega;  ///< rad / s
  Real b0;     ///< T
};

/// Gaussian Landau packet carried around a circle of radius r0 at angular frequency omega.
StateParametrization rotation_state(const RotationParams& p, const PhysicalConstants& k);

struct TranslationParams {
  Profile trajectory;  ///< Y(t), m
  Real b0;             ///< T
};

/// Gaussian packet translated along y by Y(t). With `normalized = false` the
/// required 1/sqrt(u^0(t)) factor is omitted, which makes the dynamics unreachable.
StateParametrization translation_state(const TranslationParams& p, const PhysicalConstants& k,
                                       bool normalized = true);

struct Confined3dParams {
  Profile profile;  ///< f(z), m; |f'(z)| < 1
  Real b0;          ///< T
  Real energy{0};   ///< J
};

/// Stationary state confined in 3D with beta = arcsin f'(z).
StateParametrization confined_3d_state(const Confined3dParams& p, const PhysicalConstants& k);

struct Rotation3dParams {
  Real r0;          ///< m
  Real omega;       ///< rad / s
  Real b0;          ///< T
  Profile profile;  ///< f(z), m; |f'(z)| < 1
};

/// The confined state of `confined_3d_state` carried around a circle like `rotation_state`.
/// `beta_sign` selects e^{+-i arcsin f'(z) / 2}.
StateParametrization rotation_3d_state(const Rotation3dParams& p, const PhysicalConstants& k,
                                       int beta_sign = 1);

/// Stationary state with beta = arctan(z/xi), held by a pure scalar potential.
StateParametrization scalar_state(const Real& xi, const Real& energy, const PhysicalConstants& k);

/// The z-confined state with beta = pi/2 supported by a scalar plus nonlinear interaction.
StateParametrization nonlinear_state(const Real& xi, const PhysicalConstants& k);

/// Landau ground state boosted along y with proper velocity u2.
StateParametrization boosted_landau(const Real& u2, const Real& b0, const PhysicalConstants& k);

/// Landau ground state under the time-dependent boost u^2 = e e0 t / (m c) of a constant
/// electric field e0 (V/m): the packet is translated along the hyperbolic trajectory.
StateParametrization accelerated_boost(const Real& e0, const Real& b0, const PhysicalConstants& k);

}  // namespace rdi
