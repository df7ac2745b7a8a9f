#include "rdi/complex_jet.hpp"
#include "rdi/jet.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace rdi;

namespace {

using J2 = Jet<Real, 2>;
using J3 = Jet<Real, 3>;

double d(const Real& x) { return to_double(x); }

}  // namespace

TEST_CASE("seeded coordinates") {
  const auto x = seed<2>(std::array<Real, 4>{0, 0, 0, 0});
  for (int mu = 0; mu < 4; ++mu) {
    CHECK(x[mu].value() == 0);
    for (int nu = 0; nu < 4; ++nu) {
      CHECK(x[mu].d(nu) == (mu == nu ? 1 : 0));
      CHECK(x[mu].d2(mu, nu) == 0);
    }
  }
}

TEST_CASE("square at 3") {
  const J2 x = J2::variable(Real(3), 1);
  const J2 f = x * x;
  CHECK(d(f.value()) == 9);
  CHECK(d(f.d(1)) == 6);
  CHECK(d(f.d2(1, 1)) == 2);
  CHECK(d(f.d(0)) == 0);
}

TEST_CASE("product x y") {
  const auto c = seed<2>(std::array<Real, 4>{0, 2, 3, 0});
  const J2 f = c[1] * c[2];
  CHECK(d(f.value()) == 6);
  CHECK(d(f.d(1)) == 3);
  CHECK(d(f.d(2)) == 2);
  CHECK(d(f.d2(1, 2)) == 1);
  CHECK(d(f.d2(2, 1)) == 1);
  CHECK(d(f.d2(1, 1)) == 0);
}

TEST_CASE("elementary functions") {
  const J2 zero = J2::variable(Real(0), 0);
  const J2 e = exp(zero);
  CHECK(d(e.value()) == 1);
  CHECK(d(e.d(0)) == 1);
  CHECK(d(e.d2(0, 0)) == 1);

  const J2 a = asin(J2::variable(Real("0.5"), 3));
  CHECK(d(a.d(3)) == doctest::Approx(1 / std::sqrt(0.75)).epsilon(1e-15));

  const Real xi("5e-12");
  const J2 z = J2::variable(xi, 3);
  const J2 f = sqrt(z * z + xi * xi);
  CHECK(d(f.d(3)) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));

  const J2 s = asinh(J2::variable(Real(2), 0));
  CHECK(d(s.d(0)) == doctest::Approx(1 / std::sqrt(5.0)).epsilon(1e-15));
  CHECK(d(s.d2(0, 0)) == doctest::Approx(-2 / std::pow(5.0, 1.5)).epsilon(1e-15));

  const J2 t = atan(J2::variable(Real(1), 2));
  CHECK(d(t.d(2)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d(t.d2(2, 2)) == doctest::Approx(-0.5).epsilon(1e-15));

  const J2 l = log(J2::variable(Real(4), 1));
  CHECK(d(l.d2(1, 1)) == doctest::Approx(-1.0 / 16).epsilon(1e-15));

  const J2 p = pow(J2::variable(Real(-2), 1), 3);
  CHECK(d(p.value()) == -8);
  CHECK(d(p.d(1)) == 12);
  CHECK(d(p.d2(1, 1)) == -12);

  const J2 q = pow(J2::variable(Real(4), 1), Real("0.5"));
  CHECK(d(q.d(1)) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(asin(J2(Real(2))), DomainError);
  CHECK_THROWS_AS(log(J2(Real(0))), DomainError);
  CHECK_THROWS_AS(log(J2(Real(-1))), DomainError);
  CHECK_THROWS_AS(J2(Real(1)) / J2(Real(0)), DomainError);
  CHECK_THROWS_AS(pow(J2(Real(-1)), Real("0.5")), DomainError);
}

TEST_CASE("gaussian against finite differences") {
  const auto c = seed<2>(std::array<Real, 4>{0, 1, 2, 0});
  const J2 f = exp(-(c[1] * c[1] + c[2] * c[2]));
  const Real h("1e-10");
  auto g = [](const Real& x, const Real& y) { return exp(-(x * x + y * y)); };
  const Real fx = (g(1 + h, 2) - g(1 - h, 2)) / (2 * h);
  const Real fy = (g(1, 2 + h) - g(1, 2 - h)) / (2 * h);
  CHECK(test::rel(f.d(1), fx) < 1e-8);
  CHECK(test::rel(f.d(2), fy) < 1e-8);
}

TEST_CASE("Hessian symmetry and chain rule") {
  const auto c = seed<3>(std::array<Real, 4>{Real("0.3"), Real("-0.7"), Real("1.1"), Real("0.4")});
  const J3 f = sin(c[0] * c[1]) * exp(c[2] / (c[3] + Real(2))) + sqrt(c[1] * c[1] + c[3] * c[3]);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) CHECK(f.d2(mu, nu) == f.d2(nu, mu));

  // d/dx sin(t x) = t cos(t x) at the seed
  const J3 s = sin(c[0] * c[1]);
  CHECK(test::rel(s.d(1), Real("0.3") * cos(Real("0.3") * Real("-0.7"))) < 1e-30);
  CHECK(test::rel(s.d2(0, 1), cos(Real("-0.21")) - Real("-0.21") * sin(Real("-0.21"))) < 1e-30);
}

TEST_CASE("polynomial algebra is exact") {
  const auto c = seed<3>(std::array<Real, 4>{Real(2), Real(-1), Real(3), Real("0.5")});
  const J3 p = c[0] * c[0] * c[1] + Real(3) * c[2] - c[3] * c[3] * c[3];
  CHECK(p.value() == Real(4 * -1) + Real(9) - Real("0.125"));
  CHECK(p.d(0) == Real(2 * 2 * -1));
  CHECK(p.d(1) == Real(4));
  CHECK(p.d(2) == Real(3));
  CHECK(p.d(3) == Real(-3) * Real("0.25"));
  CHECK(p.d2(0, 0) == Real(-2));
  CHECK(p.d2(0, 1) == Real(4));
  CHECK(p.d2(3, 3) == Real(-3));
  CHECK(p.partial({2, 1, 0, 0}) == Real(2));
  CHECK(p.partial({0, 0, 0, 3}) == Real(-6));

  // Linearity and product rule
  const J3 a = sin(c[1]), b = cos(c[2]);
  const J3 sum = a * Real(2) + b, prod = a * b;
  for (int mu = 0; mu < 4; ++mu) {
    CHECK(sum.d(mu) == Real(2) * a.d(mu) + b.d(mu));
    CHECK(test::rel(prod.d(mu), a.d(mu) * b.value() + a.value() * b.d(mu)) < 1e-32);
  }
}

TEST_CASE("derivative and truncation") {
  const auto c = seed<3>(std::array<Real, 4>{0, Real(2), 0, 0});
  const J3 cube = c[1] * c[1] * c[1];
  const Jet<Real, 2> dx = cube.derivative(1);
  CHECK(dx.value() == 12);
  CHECK(dx.d(1) == 12);
  CHECK(dx.d2(1, 1) == 6);
  const Jet<Real, 1> t = cube.truncate<1>();
  CHECK(t.value() == 8);
  CHECK(t.d(1) == 12);
}

TEST_CASE("complex jets") {
  const auto c = seed<2>(std::array<Real, 4>{0, Real("0.5"), 0, 0});
  const CJet<Real, 2> z(c[1], c[1] * Real(2));
  const CJet<Real, 2> w = cexp(z);
  // d/dx exp((1 + 2i) x) = (1 + 2i) exp(...)
  const Cx<Real> v = value_of(w);
  const auto dw = derivative(w, 1);
  CHECK(test::rel(value_of(dw).re, v.re - Real(2) * v.im) < 1e-32);
  CHECK(test::rel(value_of(dw).im, Real(2) * v.re + v.im) < 1e-32);
}
