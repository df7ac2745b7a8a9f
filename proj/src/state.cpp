#include "rdi/state.hpp"

#include "rdi/errors.hpp"

#include <cmath>

namespace rdi {

namespace {

using J = StateJet;
using CJ = CJet<Real, 3>;

J time_of(const Coords& x, const PhysicalConstants& k) { return x[0] / k.c; }

}  // namespace

Coords seed_coordinates(const SpacetimePoint& p, const PhysicalConstants& k) {
  return seed<3>(std::array<Real, 4>{p.t * k.c, p.x, p.y, p.z});
}

Mat2<Cx<Real>> SpinorField::value() const {
  const Cx<Real> scale = cexp(value_of(log_prefactor));
  const Mat2<Cx<Real>> l{scale * value_of(core.a11), scale * value_of(core.a12),
                         scale * value_of(core.a21), scale * value_of(core.a22)};
  return l * spin_phase_matrix(phase.value());
}

SpinorField evaluate_state(const StateParametrization& param, const SpacetimePoint& p) {
  const PhysicalConstants& k = param.constants;
  if (!param.log_rho) throw ParameterError("state parametrization has no density");
  const Coords x = seed_coordinates(p, k);

  SpinorField out;
  out.log_prefactor.re = param.log_rho(x) * Real(0.5);
  out.log_prefactor.im = param.beta ? param.beta(x) * Real(0.5) : J(Real(0));

  Mat2<CJ> core = Mat2<CJ>::identity();
  if (param.velocity[0] || param.velocity[1] || param.velocity[2]) {
    ProperVelocity<J> u;
    if (param.velocity[0]) u.u1 = param.velocity[0](x);
    if (param.velocity[1]) u.u2 = param.velocity[1](x);
    if (param.velocity[2]) u.u3 = param.velocity[2](x);
    core = boost(u);
  }
  if (param.angles[0] || param.angles[1] || param.angles[2]) {
    std::array<J, 3> theta;
    for (int i = 0; i < 3; ++i)
      if (param.angles[i]) theta[i] = param.angles[i](x);
    core = core * rotation(theta);
  }
  out.phase = time_of(x, k) * (param.energy / k.hbar);
  if (param.spin_phase) out.phase += param.spin_phase(x);
  out.core = core;
  return out;
}

StateParametrization rest_state(const PhysicalConstants& k) {
  k.validate();
  StateParametrization s;
  s.name = "rest";
  s.constants = k;
  s.log_rho = [](const Coords&) { return J(Real(0)); };
  s.energy = k.rest_energy();
  return s;
}

StateParametrization rotation_state(const RotationParams& p, const PhysicalConstants& k) {
  k.validate();
  if (!(p.r0 >= 0)) throw ParameterError("rotation radius must be non-negative");
  if (!(abs(p.r0 * p.omega) < k.c))
    throw ParameterError("rotation requires r0 |omega| < c (superluminal otherwise)");
  StateParametrization s;
  s.name = "rotation";
  s.constants = k;
  const Real width = k.e * p.b0 / (Real(2) * k.hbar);  // ln rho = -width * |r - r(t)|^2
  const Real speed_ratio = p.r0 * p.omega / k.c;
  const Real u_mag = speed_ratio / sqrt(Real(1) - speed_ratio * speed_ratio);
  s.log_rho = [=](const Coords& x) {
    const J wt = time_of(x, k) * p.omega;
    const J dx = x[1] - cos(wt) * p.r0;
    const J dy = x[2] - sin(wt) * p.r0;
    return -(dx * dx + dy * dy) * width;
  };
  s.velocity[0] = [=](const Coords& x) { return -sin(time_of(x, k) * p.omega) * u_mag; };
  s.velocity[1] = [=](const Coords& x) { return cos(time_of(x, k) * p.omega) * u_mag; };
  // Plane-wave phase (m c / hbar)(u^0 ct - u . r) of the moving packet.
  const Real kc = k.m * k.c / k.hbar;
  const Real u0 = sqrt(Real(1) + u_mag * u_mag);
  s.spin_phase = [=](const Coords& x) {
    const J wt = time_of(x, k) * p.omega;
    return (x[0] * u0 + (x[1] * sin(wt) - x[2] * cos(wt)) * u_mag) * kc;
  };
  return s;
}

StateParametrization translation_state(const TranslationParams& p, const PhysicalConstants& k,
                                       bool normalized) {
  k.validate();
  if (!p.trajectory) throw ParameterError("translation requires a trajectory");
  StateParametrization s;
  s.name = normalized ? "translation" : "translation-unnormalized";
  s.constants = k;
  const Real width = k.e * p.b0 / (Real(2) * k.hbar);
  const Profile traj = p.trajectory;
  auto proper_speed = [=](const Coords& x) {
    const J v = traj.apply(time_of(x, k), 1) / k.c;
    const J one_minus = Real(1) - v * v;
    if (!(one_minus.value() > 0)) throw ParameterError("trajectory speed reaches c");
    return v / sqrt(one_minus);
  };
  s.log_rho = [=](const Coords& x) {
    const J dy = x[2] - traj.apply(time_of(x, k));
    J lr = -(x[1] * x[1] + dy * dy) * width;
    if (normalized) {
      const J u2 = proper_speed(x);
      lr -= log(u2 * u2 + Real(1)) * Real(0.5);  // -ln u^0
    }
    return lr;
  };
  s.velocity[1] = proper_speed;
  const Real kc = k.m * k.c / k.hbar;
  s.spin_phase = [=](const Coords& x) {
    const J u2 = proper_speed(x);
    return (sqrt(u2 * u2 + Real(1)) * x[0] - u2 * x[2]) * kc;
  };
  return s;
}

StateParametrization confined_3d_state(const Confined3dParams& p, const PhysicalConstants& k) {
  k.validate();
  if (!p.profile) throw ParameterError("confined state requires a profile f(z)");
  StateParametrization s;
  s.name = "confined-3d";
  s.constants = k;
  const Real width = k.e * p.b0 / (Real(2) * k.hbar);
  const Real decay = Real(2) * k.m * k.c / k.hbar;
  const Profile f = p.profile;
  s.log_rho = [=](const Coords& x) {
    return -(x[1] * x[1] + x[2] * x[2]) * width - f.apply(x[3]) * decay;
  };
  s.beta = [=](const Coords& x) { return asin(f.apply(x[3], 1)); };
  s.energy = p.energy;
  return s;
}

StateParametrization rotation_3d_state(const Rotation3dParams& p, const PhysicalConstants& k,
                                       int beta_sign) {
  if (!p.profile) throw ParameterError("confined state requires a profile f(z)");
  StateParametrization s = rotation_state({p.r0, p.omega, p.b0}, k);
  s.name = "rotation-3d";
  const Real decay = Real(2) * k.m * k.c / k.hbar;
  const Profile f = p.profile;
  const ScalarField planar = s.log_rho;
  s.log_rho = [=](const Coords& x) { return planar(x) - f.apply(x[3]) * decay; };
  s.beta = [=](const Coords& x) { return asin(f.apply(x[3], 1)) * Real(beta_sign); };
  s.spin_phase = nullptr;
  return s;
}

StateParametrization scalar_state(const Real& xi, const Real& energy, const PhysicalConstants& k) {
  k.validate();
  if (!(xi > 0)) throw ParameterError("xi must be positive");
  StateParametrization s;
  s.name = "scalar";
  s.constants = k;
  const Real mc = k.m * k.c;
  // f(z) = eps (z^2 + xi^2) / (2 m c^2 xi) - hbar ln(z^2 + xi^2) / (4 m c), ln rho = -2 m c f / hbar
  s.log_rho = [=](const Coords& x) {
    const J q = x[3] * x[3] + xi * xi;
    const J f = q * (energy / (Real(2) * k.rest_energy() * xi)) - log(q) * (k.hbar / (Real(4) * mc));
    return f * (Real(-2) * mc / k.hbar);
  };
  s.beta = [=](const Coords& x) { return atan(x[3] / xi); };
  s.energy = energy;
  return s;
}

StateParametrization nonlinear_state(const Real& xi, const PhysicalConstants& k) {
  k.validate();
  if (!(xi > 0)) throw ParameterError("xi must be positive");
  StateParametrization s;
  s.name = "nonlinear";
  s.constants = k;
  const Real kappa_z = k.m * k.c / k.hbar;
  s.log_rho = [=](const Coords& x) {
    return (x[3] + x[3] * x[3] / xi) * (Real(-2) * kappa_z);
  };
  const Real pi = real_pi();
  s.beta = [=](const Coords&) { return J(pi / Real(2)); };
  s.energy = Real(0);
  // Normalizes exp(-mc(2z + xi)^2 / (2 xi hbar)) to unit integral over z.
  s.log_density_normalization =
      Real(0.5) * log(Real(2) * kappa_z / (pi * xi)) - kappa_z * xi / Real(2);
  return s;
}

StateParametrization boosted_landau(const Real& u2, const Real& b0, const PhysicalConstants& k) {
  k.validate();
  StateParametrization s;
  s.name = "boosted-landau";
  s.constants = k;
  const Real u0 = sqrt(Real(1) + u2 * u2);
  const Real width = k.e * b0 / (Real(2) * k.hbar);
  s.log_rho = [=](const Coords& x) {
    const J y_rest = x[0] * u2 - x[2] * u0;
    return -(x[1] * x[1] + y_rest * y_rest) * width;
  };
  s.velocity[1] = [=](const Coords&) { return J(u2); };
  const Real kc = k.m * k.c / k.hbar;
  s.spin_phase = [=](const Coords& x) { return (x[0] * u0 - x[2] * u2) * kc; };
  return s;
}

StateParametrization accelerated_boost(const Real& e0, const Real& b0, const PhysicalConstants& k) {
  k.validate();
  if (!(e0 > 0)) throw ParameterError("accelerating field must be positive");
  // Proper velocity e E0 t / (m c) along y: the packet follows the hyperbolic trajectory.
  const Real rate = k.e * e0 / (k.m * k.c);
  StateParametrization s = translation_state({hyperbolic_trajectory(rate, k.c), b0}, k);
  s.name = "accelerated-boost";
  return s;
}

}  // namespace rdi
