#include "rdi/physicality.hpp"

#include "rdi/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace rdi {

namespace {

void finish(PhysicalityVerdict& v, double threshold) {
  v.ratio = v.kinetic_energy > 0 ? v.radiated_energy / v.kinetic_energy : Real(0);
  v.pass = !v.superluminal && v.ratio < Real(threshold);
}

}  // namespace

Real larmor_power(const Real& proper_acceleration, const PhysicalConstants& k) {
  return k.e * k.e * proper_acceleration * proper_acceleration /
         (Real(6) * real_pi() * k.epsilon0 * k.c * k.c * k.c);
}

PhysicalityVerdict synchrotron_check(const RotationScenario& s, const PhysicalConstants& k,
                                     double threshold) {
  s.validate(k);
  PhysicalityVerdict v;
  const Real gamma = s.gamma(k);
  v.kinetic_energy = (gamma - Real(1)) * k.rest_energy();
  if (s.omega != 0) {
    const Real alpha = gamma * gamma * s.omega * s.omega * s.r0;
    const Real period = Real(2) * real_pi() / abs(s.omega);
    v.radiated_energy = larmor_power(alpha, k) * period;
  }
  finish(v, threshold);
  return v;
}

PhysicalityVerdict bremsstrahlung_check(const TranslationScenario& s, const Real& duration,
                                        const PhysicalConstants& k, double threshold) {
  k.validate();
  if (!s.trajectory) throw ParameterError("translation requires a trajectory");
  if (!(duration > 0)) throw ParameterError("duration must be positive");

  const Real peak = peak_speed(s.trajectory, Real(0), duration);
  if (!(peak < k.c)) throw ParameterError("trajectory speed reaches c");

  auto gamma_of = [&](const Real& speed) {
    const Real beta = speed / k.c;
    return Real(1) / sqrt(Real(1) - beta * beta);
  };
  auto power = [&](const Real& t) {
    const auto d = s.trajectory.derivatives(t);
    const Real g = gamma_of(d[1]);
    return larmor_power(g * g * g * d[2], k);
  };

  PhysicalityVerdict v;
  v.kinetic_energy = (gamma_of(peak) - Real(1)) * k.rest_energy();
  v.radiated_energy =
      boost::math::quadrature::gauss_kronrod<Real, 61>::integrate(power, Real(0), duration, 10);
  finish(v, threshold);
  return v;
}

}  // namespace rdi
