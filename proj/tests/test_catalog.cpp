#include "rdi/catalog.hpp"
#include "rdi/engine.hpp"
#include "rdi/errors.hpp"

#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace rdi;

namespace {

const PhysicalConstants kSi = PhysicalConstants::si();
const PhysicalConstants kNat = PhysicalConstants::natural();

}  // namespace

TEST_CASE("resonant frequency") {
  CHECK(test::rel(resonant_frequency(Real("0.35"), kSi), Real("-61.55e9")) < 1e-3);
  CHECK(test::rel(resonant_frequency(Real(1), kNat), 1 - sqrt(Real(3))) < 1e-33);
  CHECK(resonant_frequency(Real(0), kSi) == 0);
  CHECK_THROWS_AS(resonant_frequency(Real(-1), kSi), ParameterError);

  // The first-order series leaves an O(hbar^2) remainder.
  PhysicalConstants k = kSi;
  const Real r1 = cyclotron_expansion_residual(Real("0.35"), k);
  k.hbar /= 2;
  const Real r2 = cyclotron_expansion_residual(Real("0.35"), k);
  CHECK(test::rel(r1 / r2, Real(4)) < 1e-6);
  CHECK(test::rel(resonant_frequency(Real("0.35"), kSi), cyclotron_expansion(Real("0.35"), kSi, 2)) <
        1e-12);
}

TEST_CASE("soft Coulomb potential") {
  const Real xi("1e-12");
  CHECK(test::rel(soft_coulomb(xi, 0, kSi), -kSi.m * kSi.c - kSi.hbar / (2 * xi)) < 1e-33);
  for (const Real& z : {Real("-3e-12"), Real("0.5e-12"), Real("4e-12")})
    CHECK(test::rel(confined_3d_potential(soft_core_profile(xi), z, kSi), soft_coulomb(xi, z, kSi)) <
          1e-30);
  // Far away it tends to -xi m c / |z|.
  const Real far("1e-6");
  CHECK(test::rel(soft_coulomb(xi, far, kSi), -xi * kSi.m * kSi.c / far) < 1e-5);
  CHECK_THROWS_AS(soft_coulomb(Real(0), Real(1), kSi), ParameterError);
  CHECK_THROWS_AS(
      confined_3d_potential(sinusoidal_trajectory(Real(10), Real(1)), Real("0.5"), kSi),
      DomainError);
}

TEST_CASE("boosted Landau fields") {
  const BoostedFields rest = boosted_landau_fields(Real(0), Real(2), kSi);
  CHECK(rest.e == Vec3{0, 0, 0});
  CHECK(rest.b == Vec3{0, 0, 2});

  const Real u2("0.3");
  const BoostedFields f = boosted_landau_fields(u2, Real(1), kNat);
  // E^2 - B^2 is Lorentz invariant.
  const Real inv = f.e[0] * f.e[0] - f.b[2] * f.b[2];
  CHECK(test::rel(inv, Real(-1)) < 1e-33);

  const StateParametrization s = boosted_landau(u2, Real(1), kNat);
  const ScenarioReport r = analyze(s, {Real("0.4"), Real("0.2"), Real("-0.1"), 0});
  CHECK(test::rel(r.fields.e, f.e) < 1e-30);
  CHECK(test::rel(r.fields.b, f.b) < 1e-30);
}

TEST_CASE("rotation closed form identities") {
  const RotationScenario rs{Real("0.5"), Real("0.6"), Real("1.2")};
  const SpacetimePoint p{Real("0.3"), Real("0.1"), Real("0.2"), 0};
  const ClosedForm cf = rotation_closed_form(rs, p, kNat);
  Real j2 = 0;
  for (const auto& j : cf.mu0_e_j) j2 += j * j;
  CHECK(test::rel(j2, rotation_current_amplitude_sq(rs, p, kNat)) < 1e-30);

  // hbar -> 0 reproduces the classical field.
  PhysicalConstants k = kNat;
  k.hbar = Real("1e-20");
  CHECK(test::rel(rotation_closed_form(rs, p, k).ee, rotation_classical_field(rs, p, k)) < 1e-18);

  // The gap is |E - E_classical|.
  const Vec3 cl = rotation_classical_field(rs, p, kNat);
  Real gap2 = 0;
  for (int i = 0; i < 3; ++i) gap2 += (cf.ee[i] - cl[i]) * (cf.ee[i] - cl[i]);
  CHECK(test::rel(sqrt(gap2), rotation_quantum_gap(rs, kNat)) < 1e-30);

  // c -> infinity reproduces the nonrelativistic field.
  k = kNat;
  k.c = Real("1e8");
  CHECK(test::rel(rotation_closed_form(rs, p, k).ee, rotation_nonrelativistic_field(rs, p, k)) < 1e-12);

  // The closed-form Dirac current is Tr(Psi Psi^dagger sigma_mu) / 2.
  const ScenarioReport r = analyze(rotation_state({rs.r0, rs.omega, rs.b0}, kNat), p);
  Vec4 closed = rotation_dirac_current(rs, p, kNat);
  for (auto& j : closed) j *= 2;
  CHECK(test::rel(r.dirac.j, closed) < 1e-30);
}

TEST_CASE("translation closed form identities") {
  const TranslationScenario ts = TranslationScenario::sinusoidal(Real(2), Real(4), Real(1));
  const SpacetimePoint p{Real("1.3"), Real("0.2"), Real("0.7"), 0};
  const Vec3 cl = translation_classical_field(ts, p, kNat);
  const ClosedForm cf = translation_closed_form(ts, p, kNat);
  CHECK(test::rel(cl[0] - cf.ee[0], translation_quantum_gap(ts, p.t, kNat)) < 1e-30);

  PhysicalConstants k = kSi;
  const Real len("10e-6"), dur("1e-9");
  const TranslationScenario slow = TranslationScenario::sinusoidal(len, dur, Real(1));
  const SpacetimePoint q{Real("0.3e-9"), Real("1e-6"), Real("3e-6"), 0};
  CHECK(test::rel(translation_closed_form(slow, q, k).ee,
                  translation_nonrelativistic_field(len, dur, Real(1), q.t, k)) < 1e-6);

  const TranslationScenario still{constant_trajectory(Real("0.5")), Real(1)};
  const ClosedForm rest = translation_closed_form(still, p, kNat);
  CHECK(rest.ee == Vec3{0, 0, 0});
  CHECK(test::rel(rest.eb, Vec3{0, 0, 1}) < 1e-33);

  const TranslationScenario fast = TranslationScenario::sinusoidal(Real(4), Real(1), Real(1));
  CHECK_THROWS_AS(translation_closed_form(fast, {Real("0.5"), 0, 0, 0}, kNat), ParameterError);
}

TEST_CASE("rotating confined potential") {
  const Real xi("1e-12");
  const Rotation3dScenario rs{Real("2e-6"), Real("-61.55e9"), Real("0.35"), soft_core_profile(xi)};
  const StateParametrization s = rotation_3d_state({rs.r0, rs.omega, rs.b0, rs.profile}, kSi);
  const SpacetimePoint p{Real("1e-10"), Real("1e-6"), Real("-2e-6"), xi / 2};
  const ScenarioReport r = analyze(s, p);
  const Vec4 cf = rotation_3d_potential(rs, p, kSi);
  for (int i = 1; i < 4; ++i) CHECK(abs(-r.ea[i] - cf[i]) < Real("1e-20") * abs(cf[1]));
  CHECK(r.hermiticity_residual < 1e-20);
}

TEST_CASE("scalar potentials") {
  const Real xi("1e-12");
  const Real eps = kSi.rest_energy() / 2;
  CHECK(test::rel(scalar_potential(xi, eps, 0, kSi),
                  -kSi.rest_energy() + eps - kSi.hbar * kSi.c / (2 * xi)) < 1e-33);
  CHECK(scalar_potential(xi, eps, xi, kSi) == scalar_potential(xi, eps, -xi, kSi));
  const Real kappa = kSi.rest_energy() * xi;
  CHECK(nonlinear_scalar_potential(xi, Real(0), xi, kSi) == 2 * kSi.rest_energy());
  CHECK(nonlinear_scalar_potential(xi, kappa, -xi / 2, kSi) <
        nonlinear_scalar_potential(xi, Real(0), -xi / 2, kSi));
}

TEST_CASE("catalog listing") {
  const auto& entries = catalog_entries();
  std::set<std::string> names;
  for (const auto& e : entries) {
    CHECK_FALSE(e.description.empty());
    names.insert(e.name);
  }
  CHECK(names.size() == entries.size());
  for (const char* n : {"rotation", "translation", "confined-3d", "soft-coulomb", "boosted-landau",
                        "accelerated-boost", "scalar", "nonlinear"})
    CHECK(names.count(n) == 1);
}
