#include "rdi/config.hpp"
#include "rdi/dsl.hpp"
#include "rdi/engine.hpp"

#include "support.hpp"

#include <doctest.h>

#include <limits>

using namespace rdi;

namespace {

const std::set<std::string> kParams = {"B0", "r0", "omega", "xi", "L", "T"};

dsl::Bindings<2> bindings_at(const std::array<Real, 4>& txyz) {
  const auto c = seed<2>(txyz);
  dsl::Bindings<2> b;
  b["t"] = c[0];
  b["x"] = c[1];
  b["y"] = c[2];
  b["z"] = c[3];
  const PhysicalConstants k = PhysicalConstants::si();
  for (const auto& [name, v] : std::vector<std::pair<std::string, Real>>{
           {"hbar", k.hbar}, {"c", k.c}, {"e", k.e}, {"m", k.m}, {"epsilon0", k.epsilon0},
           {"pi", real_pi()}, {"B0", Real("0.35")}, {"r0", Real("2e-6")}, {"omega", Real(3)},
           {"xi", Real("1e-12")}, {"L", Real(2)}, {"T", Real(4)}})
    b[name] = Jet<Real, 2>(v);
  return b;
}

Real value(std::string_view src, const std::array<Real, 4>& at = {0, 0, 0, 0}) {
  return dsl::evaluate(dsl::parse(src, kParams), bindings_at(at)).value();
}

std::size_t error_offset(std::string_view src) {
  try {
    dsl::parse(src, kParams);
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  return std::string::npos;
}

/// Random well-formed expression text, with redundant parentheses sprinkled in.
std::string random_expression(int depth) {
  static const char* leaves[] = {"x", "y", "t", "z", "2", "0.5", "3e-2", "pi", "B0", "xi"};
  static const char* functions[] = {"exp", "sin", "cos", "arctan", "arcsinh", "sqrt", "log"};
  static const char* ops[] = {"+", "-", "*", "/", "^"};
  const int pick = depth <= 0 ? 0 : static_cast<int>(test::uniform(0, 4));
  std::string out;
  switch (pick) {
    case 0: out = leaves[static_cast<int>(test::uniform(0, 10))]; break;
    case 1: out = "-" + random_expression(depth - 1); break;
    case 2:
      out = std::string(functions[static_cast<int>(test::uniform(0, 7))]) + "(" +
            random_expression(depth - 1) + ")";
      break;
    default:
      out = random_expression(depth - 1) + ops[static_cast<int>(test::uniform(0, 5))] +
            random_expression(depth - 1);
  }
  if (test::uniform(0, 1) < 0.3) out = "(" + out + ")";
  return out;
}

}  // namespace

TEST_CASE("grammar examples") {
  const dsl::Expr g = dsl::parse("exp(-(x^2+y^2)*e*B0/(4*hbar))", kParams);
  CHECK(g.identifiers() == std::set<std::string>{"B0", "e", "hbar", "x", "y"});
  const Real x("1e-6"), y("-2e-6");
  const PhysicalConstants k = PhysicalConstants::si();
  CHECK(test::rel(value("exp(-(x^2+y^2)*e*B0/(4*hbar))", {0, x, y, 0}),
                  exp(-(x * x + y * y) * k.e * Real("0.35") / (4 * k.hbar))) < 1e-30);

  const Real xi("1e-12"), z("0.7e-12");
  CHECK(test::rel(value("arcsin(z/sqrt(xi^2+z^2))", {0, 0, 0, z}), asin(z / sqrt(xi * xi + z * z))) <
        1e-33);
}

TEST_CASE("precedence and associativity") {
  CHECK(value("2^3^2") == 512);
  CHECK(value("-2^2") == -4);
  CHECK(value("(-2)^2") == 4);
  CHECK(value("2^-1") == Real("0.5"));
  CHECK(value("1 - 2 - 3") == -4);
  CHECK(value("8 / 4 / 2") == 1);
  CHECK(value("1 + 2 * 3") == 7);
  CHECK(value("-3 * -2") == 6);
  CHECK(value("--1") == 1);
  CHECK(value("2 * 3 ^ 2") == 18);
  CHECK(value(".5e1 + 1E-1") == Real("5.1"));
}

TEST_CASE("syntax errors carry offsets") {
  CHECK(error_offset("2*)x(") == 2);
  CHECK(error_offset("") == 0);
  CHECK(error_offset("x +") == 3);
  CHECK(error_offset("(x + 1") == 6);
  CHECK(error_offset("x $ y") == 2);
  CHECK(error_offset("sin x") == 0);
  CHECK(error_offset("x y") == 2);
  CHECK(error_offset("exp()") == 4);

  try {
    dsl::parse("x + foo", kParams);
    FAIL("expected an error");
  } catch (const UnknownIdentifierError& e) {
    CHECK(e.name() == "foo");
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(dsl::parse("tan(x)", kParams), UnknownIdentifierError);
  CHECK_THROWS_AS(dsl::parse("r0", {}), UnknownIdentifierError);
  CHECK_NOTHROW(dsl::parse("x*hbar/(m*c) + pi", {}));
}

TEST_CASE("evaluation over jets") {
  const auto c = seed<2>(std::array<Real, 4>{0, 2, 3, 0});
  dsl::Bindings<2> b{{"x", c[1]}, {"y", c[2]}};
  const Jet<Real, 2> f = dsl::evaluate(dsl::parse("x*y"), b);
  CHECK(f.value() == 6);
  CHECK(f.d(1) == 3);
  CHECK(f.d(2) == 2);
  CHECK(f.d2(1, 2) == 1);

  const Jet<Real, 2> p = dsl::evaluate(dsl::parse("x^3 - 2^x"), b);
  CHECK(test::rel(p.d(1), 12 - log(Real(2)) * 4) < 1e-33);
  CHECK(test::rel(p.d2(1, 1), 12 - log(Real(2)) * log(Real(2)) * 4) < 1e-33);

  CHECK_THROWS_AS(dsl::evaluate(dsl::parse("arcsin(2)"), dsl::Bindings<2>{}), DomainError);
  CHECK_THROWS_AS(dsl::evaluate(dsl::parse("log(0)"), dsl::Bindings<2>{}), DomainError);
  CHECK_THROWS_AS(dsl::evaluate(dsl::parse("x + 1"), dsl::Bindings<2>{}), UnboundIdentifierError);
}

TEST_CASE("printing") {
  CHECK(dsl::parse("((x))").to_string() == "x");
  CHECK(dsl::parse("(x + y) * z").to_string() == "(x + y)*z");
  CHECK(dsl::parse("x - (y - z)").to_string() == "x - (y - z)");
  CHECK(dsl::parse("(x - y) - z").to_string() == "x - y - z");
  CHECK(dsl::parse("(2^3)^2").to_string() == "(2^3)^2");
  CHECK(dsl::parse("2^(3^2)").to_string() == "2^3^2");
  CHECK(dsl::parse("-(x^2)").to_string() == "-x^2");
  CHECK(dsl::parse("(-x)^2").to_string() == "(-x)^2");
  CHECK(dsl::parse("x / (y * z)").to_string() == "x/(y*z)");
  CHECK(dsl::parse("sin( x )").to_string() == "sin(x)");
  CHECK(dsl::parse("1.50e-3").to_string() == "1.50e-3");
}

TEST_CASE("parse-print-parse is a fixed point") {
  for (int i = 0; i < 500; ++i) {
    const std::string src = random_expression(5);
    CAPTURE(src);
    const dsl::Expr first = dsl::parse(src, kParams);
    const std::string printed = first.to_string();
    const dsl::Expr second = dsl::parse(printed, kParams);
    CHECK(second.to_string() == printed);

    const std::array<Real, 4> at = {Real("0.3"), Real("0.2"), Real("0.7"), Real("0.1")};
    auto eval = [&](const dsl::Expr& e) -> std::optional<Real> {
      try {
        return dsl::evaluate(e, bindings_at(at)).value();
      } catch (const DomainError&) {
        return std::nullopt;
      }
    };
    const auto a = eval(first), b = eval(second);
    REQUIRE(a.has_value() == b.has_value());
    if (a && isfinite(*a)) CHECK(((*a == *b) || (isnan(*a) && isnan(*b))));
  }
}

namespace {

struct Twin {
  const char* builtin;
  const char* custom;
  SpacetimePoint point;
};

const char* const kRotationParams = R"([parameters]
r0 = 2e-6
omega = -61.55e9
B0 = 0.35
U = (r0*omega/c)/sqrt(1 - (r0*omega/c)^2)
)";

}  // namespace

TEST_CASE("DSL twins of built-in scenarios") {
  const std::string rot_params = kRotationParams;
  const std::vector<Twin> twins = {
      {"scenario = rotation\n",
       R"([state]
log_rho = -((x - r0*cos(omega*t))^2 + (y - r0*sin(omega*t))^2)*e*B0/(2*hbar)
u1 = -sin(omega*t)*U
u2 = cos(omega*t)*U
spin_phase = m*c/hbar*(c*t*sqrt(1 + U^2) + (x*sin(omega*t) - y*cos(omega*t))*U)
)",
       {Real("3e-11"), Real("1.5e-6"), Real("0.5e-6"), Real("1e-7")}},
      {"scenario = boosted-landau\n[parameters]\nu2 = 0.3\nB0 = 1\n",
       R"([state]
log_rho = -(x^2 + (c*t*u2 - y*sqrt(1 + u2^2))^2)*e*B0/(2*hbar)
u2 = u2
spin_phase = m*c/hbar*(c*t*sqrt(1 + u2^2) - y*u2)
)",
       {Real("1e-12"), Real("3e-8"), Real("-2e-8"), 0}},
      {"scenario = soft-coulomb\n[parameters]\nxi = 1e-12\nB0 = 1\n",
       R"([state]
log_rho = -(x^2 + y^2)*e*B0/(2*hbar) - 2*m*c/hbar*sqrt(xi^2 + z^2)
beta = arcsin(z/sqrt(xi^2 + z^2))
)",
       {0, Real("1e-8"), Real("2e-8"), Real("0.3e-12")}},
  };
  for (const auto& twin : twins) {
    CAPTURE(twin.builtin);
    const bool rotation = std::string(twin.builtin).find("rotation") != std::string::npos;
    const std::string params = rotation ? rot_params : "";
    const ScenarioConfig a = parse_config(std::string(twin.builtin) + params);
    std::string custom_src = std::string(twin.builtin) + params + twin.custom;
    custom_src.replace(custom_src.find("scenario = ") + 11,
                       custom_src.find('\n') - custom_src.find("scenario = ") - 11, "custom");
    const ScenarioConfig b = parse_config(custom_src);

    const ScenarioReport ra = analyze(build_state(a), twin.point);
    const ScenarioReport rb = analyze(build_state(b), twin.point);
    CHECK(test::rel(rb.ea, ra.ea) < 1e-12);
    CHECK(test::rel(rb.fields.e, ra.fields.e) < 1e-12);
    CHECK(test::rel(rb.fields.b, ra.fields.b) < 1e-12);
    CHECK(test::rel(rb.maxwell_current, ra.maxwell_current) < 1e-12);
  }
}

TEST_CASE("DSL twin of the translation trajectory") {
  const std::string base = "scenario = translation\n[parameters]\nL = 10e-6\nT = 1e-9\nB0 = 1\n";
  const ScenarioConfig a = parse_config(base);
  const ScenarioConfig b = parse_config(base + "[state]\ntrajectory = L/2*(1 + sin(pi*(t - T/2)/T))\n");
  const SpacetimePoint p{Real("0.3e-9"), Real("1e-6"), Real("2e-6"), 0};
  const ScenarioReport ra = analyze(build_state(a), p);
  const ScenarioReport rb = analyze(build_state(b), p);
  CHECK(test::rel(rb.ea, ra.ea) < 1e-12);
  CHECK(test::rel(rb.fields.e, ra.fields.e) < 1e-12);
  CHECK(test::rel(rb.maxwell_current, ra.maxwell_current) < 1e-12);
}

TEST_CASE("DSL twin of the scalar state") {
  const std::string base = "scenario = scalar\n[parameters]\nxi = 1e-12\nenergy = 0.5*m*c^2\n";
  const ScenarioConfig a = parse_config(base);
  const ScenarioConfig b = parse_config(
      "scenario = custom\ninteraction = scalar\n" + base.substr(base.find('[')) + R"([state]
log_rho = -2*m*c/hbar*(energy*(z^2 + xi^2)/(2*m*c^2*xi) - hbar*log(z^2 + xi^2)/(4*m*c))
beta = arctan(z/xi)
energy = energy
)");
  CHECK(b.interaction == Interaction::Scalar);
  for (const Real& z : {Real("-4e-12"), Real("0.2e-12"), Real("3e-12")}) {
    const SpacetimePoint p{0, 0, 0, z};
    const ScalarInversion va = scalar_inversion(build_state(a), p, Real(0));
    const ScalarInversion vb = scalar_inversion(build_state(b), p, Real(0));
    CHECK(test::rel(vb.v, va.v) < 1e-12);
  }
}
