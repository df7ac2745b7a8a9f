// Dispersionless translation of a Gaussian packet along y.

#include "rdi/catalog.hpp"
#include "rdi/errors.hpp"

namespace rdi {

namespace {

struct Kinematics {
  Real y, y1, y2, y3, y4;
};

Kinematics kinematics(const TranslationScenario& s, const Real& t, const PhysicalConstants& k) {
  if (!s.trajectory) throw ParameterError("translation requires a trajectory");
  const auto d = s.trajectory.derivatives(t);
  if (!(abs(d[1]) < k.c)) throw ParameterError("trajectory speed reaches c");
  return {d[0], d[1], d[2], d[3], d[4]};
}

}  // namespace

TranslationScenario TranslationScenario::sinusoidal(const Real& length, const Real& duration,
                                                    const Real& b0) {
  return {sinusoidal_trajectory(length, duration), b0};
}

ClosedForm translation_closed_form(const TranslationScenario& s, const SpacetimePoint& p,
                                   const PhysicalConstants& k) {
  const Kinematics q = kinematics(s, p.t, k);
  const Real &c = k.c, &m = k.m, &hbar = k.hbar, &t = p.t, &x = p.x, &y = p.y;
  const Real &Y = q.y, &Y1 = q.y1, &Y2 = q.y2, &Y3 = q.y3, &Y4 = q.y4;
  const Real eb0 = k.e * s.b0;
  const Real root = sqrt(c * c - Y1 * Y1);
  const Real inner = c * (root + c) - Y1 * Y1;
  ClosedForm f;

  f.ea[0] = c * (4 * c * (root + c) - Y1 * Y1 * (sqrt(1 - Y1 * Y1 / (c * c)) + 3)) *
            (x * Y1 * (c * c - Y1 * Y1) * eb0 - 2 * c * c * m * Y2 * (y - t * Y1)) /
            (2 * inner * inner * inner);
  f.ea[1] = (hbar * Y2 - (c * c - Y1 * Y1) * eb0 * (y - Y)) / (2 * c * root);
  f.ea[2] = c * x * eb0 / (2 * root);
  f.ea[3] = 0;

  // e E and e B
  f.eb = {Real(0), Real(0), eb0 * (2 * c * c - Y1 * Y1) / (2 * c * root)};
  const Real cube = pow(c * c - Y1 * Y1, Real(1.5));
  f.ee[0] = (Y1 * Y1 * Y1 * eb0 * ((y - Y) * Y2 + 3 * c * c) -
             Y1 * (c * c * (y - Y) * Y2 * eb0 + hbar * Y2 * Y2 + 2 * pow(c, 4) * eb0) -
             c * c * hbar * Y3 + Y1 * Y1 * hbar * Y3 - pow(Y1, 5) * eb0) /
            (2 * c * cube);
  f.ee[1] = Y2 * (2 * c * c * c * m - c * x * Y1 * eb0) / (2 * cube);
  f.ee[2] = 0;

  // mu0 e J, with Q = sqrt(c^2 - Ydot^2)
  const Real Q = root, Q2 = Q * Q, Q5 = pow(Q, 5);
  f.mu0_e_j[0] = (Q2 * Y1 * Y3 * (3 * hbar * Y2 + Q2 * (y - Y) * eb0) +
                  3 * Q2 * pow(Y1, 4) * Y2 * eb0 + 2 * Y1 * Y1 * hbar * pow(Y2, 3) +
                  Q2 * Q2 * hbar * Y4) /
                     (2 * c * c * c * Q5) +
                 c * Y2 * eb0 / (Q2 * Q) +
                 Y2 * (Q2 * (y - Y) * Y2 * eb0 + hbar * Y2 * Y2 - 4 * Q2 * Y1 * Y1 * eb0) /
                     (2 * c * Q5);
  f.mu0_e_j[1] = c * (x * Y2 * Y2 * eb0 - 2 * m * Q2 * Y3 - 6 * m * Y1 * Y2 * Y2) / (2 * Q5) +
                 x * Y1 * eb0 * (Q2 * Y3 + 2 * Y1 * Y2 * Y2) / (2 * c * Q5);
  f.mu0_e_j[2] = 0;
  return f;
}

Vec3 translation_classical_field(const TranslationScenario& s, const SpacetimePoint& p,
                                 const PhysicalConstants& k) {
  const Kinematics q = kinematics(s, p.t, k);
  const Real &c = k.c, &m = k.m, &x = p.x, &y = p.y;
  const Real &Y = q.y, &Y1 = q.y1, &Y2 = q.y2;
  const Real eb0 = k.e * s.b0;
  const Real root = sqrt(c * c - Y1 * Y1);
  return {Y1 * eb0 * ((Y - y) * Y2 - 2 * c * c + Y1 * Y1) / (2 * c * root),
          c * Y2 * (2 * c * c * m - eb0 * x * Y1) / (2 * pow(c * c - Y1 * Y1, Real(1.5))),
          Real(0)};
}

Real translation_quantum_gap(const TranslationScenario& s, const Real& t,
                             const PhysicalConstants& k) {
  const Kinematics q = kinematics(s, t, k);
  const Real beta2 = q.y1 * q.y1 / (k.c * k.c);
  const Real gamma = Real(1) / sqrt(1 - beta2);
  const Real gamma_dot = gamma * gamma * gamma * q.y1 * q.y2 / (k.c * k.c);
  return k.hbar / (2 * k.c * k.c) * (gamma_dot * q.y2 + gamma * q.y3);
}

Vec3 translation_nonrelativistic_field(const Real& length, const Real& duration, const Real& b0,
                                       const Real& t, const PhysicalConstants& k) {
  const Real pi = real_pi();
  const Real amp = pi * length / (2 * duration);
  return {-amp * k.e * b0 * sin(pi * t / duration),
          amp * (pi * k.m / duration) * cos(pi * t / duration), Real(0)};
}

Vec3 translation_low_energy_current(const TranslationScenario& s, const Real& t,
                                    const PhysicalConstants& k) {
  const Kinematics q = kinematics(s, t, k);
  const Real c2 = k.c * k.c;
  return {k.e * s.b0 * q.y2 / c2, -k.m * q.y3 / c2, Real(0)};
}

}  // namespace rdi
