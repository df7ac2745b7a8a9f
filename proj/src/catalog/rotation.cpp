// Dispersionless rotation of a Gaussian packet in the plane.

#include "rdi/catalog.hpp"
#include "rdi/errors.hpp"

namespace rdi {

Real RotationScenario::speed(const PhysicalConstants&) const { return abs(r0 * omega); }

Real RotationScenario::gamma(const PhysicalConstants& k) const {
  const Real beta = r0 * omega / k.c;
  return Real(1) / sqrt(Real(1) - beta * beta);
}

void RotationScenario::validate(const PhysicalConstants& k) const {
  k.validate();
  if (!(r0 >= 0)) throw ParameterError("rotation radius must be non-negative");
  if (!(speed(k) < k.c))
    throw ParameterError("rotation requires r0 |omega| < c (superluminal otherwise)");
}

ClosedForm rotation_closed_form(const RotationScenario& s, const SpacetimePoint& p,
                                const PhysicalConstants& k) {
  s.validate(k);
  const Real &r0 = s.r0, &w = s.omega, &c = k.c, &m = k.m, &hbar = k.hbar;
  const Real &t = p.t, &x = p.x, &y = p.y;
  const Real eb0 = k.e * s.b0;
  const Real root = sqrt(c * c - r0 * r0 * w * w);
  const Real root_split = sqrt((c - r0 * w) * (c + r0 * w));
  const Real cw = cos(t * w), sw = sin(t * w), c2w = cos(2 * t * w), s2w = sin(2 * t * w);
  ClosedForm f;

  // eA_0 .. eA_3
  f.ea[0] = r0 * w * (eb0 + 2 * m * w) * (x * cw + y * sw) / (2 * root) -
            r0 * r0 * w * eb0 / (2 * root) + w * hbar / (2 * root) - w * hbar / (2 * c);
  f.ea[1] = (y * eb0 * (-2 * c * c + r0 * r0 * w * w * c2w + r0 * r0 * w * w) -
             2 * r0 * sw * (c * c * (-eb0) + r0 * x * w * w * eb0 * cw + w * w * hbar)) /
            (4 * c * root_split);
  f.ea[2] = (r0 * (cw * (2 * w * w * hbar - 2 * c * c * eb0) +
                   r0 * w * w * eb0 * (x * c2w + y * s2w)) +
             x * eb0 * (2 * c * c - r0 * r0 * w * w)) /
            (4 * c * root_split);
  f.ea[3] = 0;

  // e E
  f.ee[0] = r0 * w *
            (cw * (w * w * hbar - 2 * c * c * (eb0 + m * w)) +
             r0 * w * w * eb0 * (x * c2w + y * s2w)) /
            (2 * c * root_split);
  f.ee[1] = r0 * w *
            (sw * (-2 * c * c * (eb0 + m * w) + 2 * r0 * x * w * w * eb0 * cw + w * w * hbar) -
             r0 * y * w * w * eb0 * c2w) /
            (2 * c * root_split);
  f.ee[2] = 0;

  // e B
  f.eb = {Real(0), Real(0), eb0 * (2 * c * c - r0 * r0 * w * w) / (2 * c * root)};

  // mu0 e J
  f.mu0_e_j[0] = -(r0 * w *
                   (2 * r0 * w * w * w * eb0 * (y * c2w - x * s2w) -
                    w * sw * (w * w * hbar - 2 * c * c * (eb0 + m * w)))) /
                 (2 * c * c * c * root);
  f.mu0_e_j[1] = -(r0 * w * w *
                   (cw * (w * w * hbar - 2 * c * c * (eb0 + m * w)) +
                    2 * r0 * w * w * eb0 * (x * c2w + y * s2w))) /
                 (2 * c * c * c * root);
  f.mu0_e_j[2] = 0;
  return f;
}

Vec3 rotation_classical_field(const RotationScenario& s, const SpacetimePoint& p,
                              const PhysicalConstants& k) {
  s.validate(k);
  const Real &r0 = s.r0, &w = s.omega, &c = k.c, &m = k.m;
  const Real &t = p.t, &x = p.x, &y = p.y;
  const Real eb0 = k.e * s.b0;
  const Real root = sqrt(c * c - r0 * r0 * w * w);
  const Real cw = cos(t * w), sw = sin(t * w), c2w = cos(2 * t * w), s2w = sin(2 * t * w);
  // hbar -> 0 limit of e E
  return {r0 * w * (r0 * w * w * eb0 * (x * c2w + y * s2w) - 2 * c * c * cw * (eb0 + m * w)) /
              (2 * c * root),
          -(r0 * w *
            (2 * sw * (c * c * (eb0 + m * w) - r0 * x * w * w * eb0 * cw) +
             r0 * y * w * w * eb0 * c2w)) /
              (2 * c * root),
          Real(0)};
}

Vec3 rotation_nonrelativistic_field(const RotationScenario& s, const SpacetimePoint& p,
                                    const PhysicalConstants& k) {
  const Real &r0 = s.r0, &w = s.omega;
  const Real drive = k.e * s.b0 + k.m * w;
  return {-r0 * w * cos(p.t * w) * drive, -r0 * w * sin(p.t * w) * drive, Real(0)};
}

Real rotation_quantum_gap(const RotationScenario& s, const PhysicalConstants& k) {
  return s.gamma(k) * abs(s.r0 * s.omega * s.omega * s.omega) * k.hbar / (2 * k.c * k.c);
}

Real rotation_current_amplitude_sq(const RotationScenario& s, const SpacetimePoint& p,
                                   const PhysicalConstants& k) {
  const Real &r0 = s.r0, &w = s.omega, &c = k.c, &m = k.m, &hbar = k.hbar;
  const Real &t = p.t, &x = p.x, &y = p.y;
  const Real eb0 = k.e * s.b0;
  const Real pref = r0 * r0 * pow(w, 4) / (4 * pow(c, 6) * (c * c - r0 * r0 * w * w));
  const Real drive = w * w * hbar - 2 * c * c * (eb0 + m * w);
  const Real a = sin(t * w) * drive - 2 * r0 * w * w * eb0 * (y * cos(2 * t * w) - x * sin(2 * t * w));
  const Real b = cos(t * w) * drive + 2 * r0 * w * w * eb0 * (x * cos(2 * t * w) + y * sin(2 * t * w));
  return pref * a * a + pref * b * b;
}

Vec4 rotation_dirac_current(const RotationScenario& s, const SpacetimePoint& p,
                            const PhysicalConstants& k) {
  const Real &r0 = s.r0, &w = s.omega, &c = k.c;
  const Real dx = p.x - r0 * cos(p.t * w), dy = p.y - r0 * sin(p.t * w);
  const Real density = exp(-(k.e * s.b0) * (dx * dx + dy * dy) / (2 * k.hbar));
  const Real root = sqrt(c * c - r0 * r0 * w * w);
  // Gaussian density over the Lorentz factor
  return {c * density / root, -r0 * w * sin(p.t * w) * density / root,
          r0 * w * cos(p.t * w) * density / root, Real(0)};
}

Real resonant_frequency(const Real& b0, const PhysicalConstants& k) {
  k.validate();
  if (!(b0 >= 0)) throw ParameterError("B0 must be non-negative");
  const Real rest = k.rest_energy();
  // (mc^2 - sqrt((mc^2)^2 + 2 c^2 e B0 hbar)) / hbar, rationalized against cancellation.
  const Real shift = 2 * k.c * k.c * k.e * b0;
  return -shift / (rest + sqrt(rest * rest + shift * k.hbar));
}

Real cyclotron_expansion(const Real& b0, const PhysicalConstants& k, int order) {
  const Real wc = k.e * b0 / k.m;
  const Real rest = k.rest_energy();
  Real out = -wc;
  if (order >= 1) out += wc * wc / (2 * rest) * k.hbar;
  if (order >= 2) out -= wc * wc * wc / (2 * rest * rest) * k.hbar * k.hbar;
  return out;
}

Real cyclotron_expansion_residual(const Real& b0, const PhysicalConstants& k) {
  return resonant_frequency(b0, k) - cyclotron_expansion(b0, k, 1);
}

}  // namespace rdi
