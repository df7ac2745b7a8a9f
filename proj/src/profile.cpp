#include "rdi/profile.hpp"

#include "rdi/errors.hpp"

namespace rdi {

Real peak_speed(const Profile& y, const Real& t0, const Real& t1, int samples) {
  Real peak{0};
  for (int i = 0; i <= samples; ++i) {
    const Real t = t0 + (t1 - t0) * Real(i) / Real(samples);
    peak = std::max(peak, abs(y.derivative(1, t)));
  }
  return peak;
}

Profile sinusoidal_trajectory(const Real& length, const Real& duration) {
  if (!(duration > 0)) throw ParameterError("trajectory duration must be positive");
  const Real pi = real_pi();
  return Profile("sinusoidal", [=](const Profile::Jet4& t) {
    return (sin((t - duration / 2) * (pi / duration)) + Real(1)) * (length / 2);
  });
}

Profile hyperbolic_trajectory(const Real& rate, const Real& c) {
  if (!(rate > 0)) throw ParameterError("acceleration rate must be positive");
  return Profile("hyperbolic", [=](const Profile::Jet4& t) {
    const Profile::Jet4 ut = t * rate;
    return (sqrt(ut * ut + Real(1)) - Real(1)) * (c / rate);
  });
}

Profile constant_trajectory(const Real& y0) {
  return Profile("constant", [=](const Profile::Jet4&) { return Profile::Jet4(y0); });
}

Profile soft_core_profile(const Real& xi) {
  if (!(xi > 0)) throw ParameterError("xi must be positive");
  return Profile("soft-core", [=](const Profile::Jet4& z) { return sqrt(z * z + xi * xi); });
}

}  // namespace rdi
