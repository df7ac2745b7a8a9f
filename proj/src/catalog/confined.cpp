// Stationary confined states, their rotation, and the scalar-interaction examples.

#include "rdi/catalog.hpp"
#include "rdi/errors.hpp"

namespace rdi {

Real confined_3d_potential(const Profile& f, const Real& z, const PhysicalConstants& k) {
  const auto d = f.derivatives(z);
  const Real slope2 = d[1] * d[1];
  if (!(slope2 < 1)) throw DomainError("confined potential requires |f'(z)| < 1");
  return (2 * k.m * k.c * (slope2 - 1) - k.hbar * d[2]) / (2 * sqrt(1 - slope2));
}

Real soft_coulomb(const Real& xi, const Real& z, const PhysicalConstants& k) {
  if (!(xi > 0)) throw ParameterError("xi must be positive");
  const Real q = xi * xi + z * z;
  return -xi * k.m * k.c / sqrt(q) - xi * k.hbar / (2 * q);
}

Vec4 rotation_3d_potential(const Rotation3dScenario& s, const SpacetimePoint& p,
                           const PhysicalConstants& k) {
  const auto d = s.profile.derivatives(p.z);
  const Real &f1 = d[1], &f2 = d[2];
  if (!(f1 * f1 < 1)) throw DomainError("confined potential requires |f'(z)| < 1");
  const Real &r0 = s.r0, &w = s.omega, &c = k.c, &m = k.m, &hbar = k.hbar;
  const Real &t = p.t, &x = p.x, &y = p.y;
  const Real eb0 = k.e * s.b0;
  const Real root = sqrt(c * c - r0 * r0 * w * w);
  const Real slope = sqrt(1 - f1 * f1);
  const Real W = c * root + c * c - r0 * r0 * w * w;
  const Real cw = cos(t * w), sw = sin(t * w), c2w = cos(2 * t * w), s2w = sin(2 * t * w);
  const Real rw2 = r0 * r0 * w * w;
  Vec4 a;
  a[0] = root / (2 * c * pow(W, 4) * slope) *
         (-eb0 * c * r0 * w * slope * (rw2 + 2 * W * W) * (r0 - x * cw - y * sw) -
          4 * pow(c, 5) * m - 2 * pow(c, 4) * hbar * f2 +
          2 * c * c * c * m * f1 * f1 * (rw2 + 2 * W * W) + 2 * c * c * c * m * rw2 +
          c * c * rw2 * hbar * f2 + rw2 * w * hbar * root * slope - 4 * pow(c, 4) * m * root -
          2 * c * c * c * hbar * root * f2 + c * rw2 * w * hbar * slope);
  a[1] = (-eb0 * slope *
              (-2 * c * c * r0 * sw + 2 * c * c * y + r0 * r0 * x * w * w * s2w -
               r0 * r0 * y * w * w * c2w - r0 * r0 * y * w * w) -
          4 * c * c * m * r0 * w * f1 * f1 * sw +
          2 * r0 * w * sw * (2 * c * c * m + c * hbar * f2 - w * hbar * slope)) /
         (4 * c * root * slope);
  a[2] = (eb0 * slope *
              (-2 * c * c * r0 * cw + 2 * c * c * x + r0 * r0 * x * w * w * c2w +
               r0 * r0 * y * w * w * s2w - r0 * r0 * x * w * w) +
          4 * c * c * m * r0 * w * f1 * f1 * cw +
          2 * r0 * w * cw * (-2 * c * c * m - c * hbar * f2 + w * hbar * slope)) /
         (4 * c * root * slope);
  a[3] = 0;
  return a;
}

Real scalar_potential(const Real& xi, const Real& energy, const Real& z,
                      const PhysicalConstants& k) {
  const Real q = sqrt(z * z + xi * xi);
  return -k.rest_energy() + energy / xi * q - k.hbar * k.c / (2 * q);
}

Real nonlinear_scalar_potential(const Real& xi, const Real& kappa, const Real& z,
                                const PhysicalConstants& k) {
  const Real mc = k.m * k.c;
  const Real shift = 2 * z + xi;
  return 2 * k.rest_energy() * z / xi -
         kappa * sqrt(2 * mc / (real_pi() * xi * k.hbar)) * exp(-mc * shift * shift / (2 * xi * k.hbar));
}

BoostedFields boosted_landau_fields(const Real& u2, const Real& b0, const PhysicalConstants& k) {
  const Real u0 = sqrt(1 + u2 * u2);
  return {{-u2 * k.c * b0, Real(0), Real(0)}, {Real(0), Real(0), u0 * b0}};
}

}  // namespace rdi
