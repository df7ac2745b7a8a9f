#include "rdi/errors.hpp"
#include "rdi/physicality.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace rdi;

namespace {

const PhysicalConstants kSi = PhysicalConstants::si();

double decades(const Real& x) { return to_double(log10(x)); }

}  // namespace

TEST_CASE("Larmor power") {
  CHECK(larmor_power(Real(0), kSi) == 0);
  const Real a("1e20");
  CHECK(test::rel(larmor_power(2 * a, kSi), 4 * larmor_power(a, kSi)) < 1e-33);
  // e^2 / (6 pi eps0 c^3) = 5.71e-54 J s^3 / m^2
  CHECK(to_double(larmor_power(Real(1), kSi)) == doctest::Approx(5.71e-54).epsilon(1e-3));
}

TEST_CASE("synchrotron loss of the rotating packet") {
  const RotationScenario rs{Real("2e-6"), Real("-61.55e9"), Real("0.35")};
  const PhysicalityVerdict v = synchrotron_check(rs, kSi);
  CHECK(v.pass);
  CHECK_FALSE(v.superluminal);
  CHECK(std::abs(decades(v.ratio) + 11) < 2);
  // Nonrelativistic kinetic energy m v^2 / 2
  const Real speed = rs.r0 * abs(rs.omega);
  CHECK(test::rel(v.kinetic_energy, kSi.m * speed * speed / 2) < 1e-6);

  const PhysicalityVerdict still = synchrotron_check({Real("2e-6"), Real(0), Real(1)}, kSi);
  CHECK(still.radiated_energy == 0);
  CHECK(still.kinetic_energy == 0);
  CHECK(still.ratio == 0);
  CHECK(still.pass);

  CHECK_THROWS_AS(synchrotron_check({Real(1), kSi.c, Real(1)}, kSi), ParameterError);

  // A tight threshold rejects the same motion.
  CHECK_FALSE(synchrotron_check(rs, kSi, 1e-13).pass);
}

TEST_CASE("synchrotron ratio grows with the frequency") {
  Real previous = 0;
  for (const Real& w : {Real("1e9"), Real("1e10"), Real("1e11"), Real("1e12")}) {
    const Real r = synchrotron_check({Real("2e-6"), w, Real(0)}, kSi).ratio;
    CHECK(r > previous);
    previous = r;
  }
}

TEST_CASE("bremsstrahlung of the translated packet") {
  const Real len("10e-6"), dur("1e-9");
  const TranslationScenario ts = TranslationScenario::sinusoidal(len, dur, Real(1));
  const PhysicalityVerdict v = bremsstrahlung_check(ts, dur, kSi);
  CHECK(v.pass);
  const Real vmax = real_pi() * len / (2 * dur);
  CHECK(test::rel(v.kinetic_energy, kSi.m * vmax * vmax / 2) < 1e-6);

  // Nonrelativistic loss: integral of Y''^2 is (pi/T)^4 (L/2)^2 T / 2.
  const Real pi = real_pi();
  const Real integral = pow(pi / dur, 4) * len * len / 4 * dur / 2;
  CHECK(test::rel(v.radiated_energy, larmor_power(Real(1), kSi) * integral) < 1e-6);

  const PhysicalityVerdict still =
      bremsstrahlung_check({constant_trajectory(Real("1e-6")), Real(1)}, dur, kSi);
  CHECK(still.radiated_energy == 0);
  CHECK(still.ratio == 0);

  // Hundredfold shorter duration: loss grows as T^-3 and kinetic energy as T^-2.
  const PhysicalityVerdict quick = bremsstrahlung_check(
      TranslationScenario::sinusoidal(len, dur / 100, Real(1)), dur / 100, kSi);
  CHECK(test::rel(quick.ratio / v.ratio, Real(100)) < 1e-3);

  CHECK_THROWS_AS(bremsstrahlung_check(ts, Real(0), kSi), ParameterError);
  CHECK_THROWS_AS(
      bremsstrahlung_check(TranslationScenario::sinusoidal(Real(1), Real("1e-9"), Real(1)),
                           Real("1e-9"), kSi),
      ParameterError);
}
