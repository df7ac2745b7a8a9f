#include "rdi/config.hpp"
#include "rdi/errors.hpp"

#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace rdi;

namespace {

std::string config_error(std::string_view text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

bool contains(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

}  // namespace

TEST_CASE("raw document") {
  const ConfigDocument doc = parse_config_text(R"(# leading comment
scenario = rotation   # trailing comment

[parameters]
r0 = 2e-6
label = "quoted"
[state.extra]
beta = 0
)");
  REQUIRE(doc.count("parameters") == 1);
  CHECK(doc.at("").find("scenario")->value == "rotation");
  CHECK(doc.at("parameters").find("r0")->line == 5);
  CHECK(doc.at("parameters").find("label")->value == "quoted");
  CHECK(doc.at("state.extra").find("beta")->value == "0");
  CHECK(doc.at("parameters").find("missing") == nullptr);

  CHECK_THROWS_AS(parse_config_text("[open\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("novalue\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("a = 1\na = 2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[]\n"), ConfigError);
}

TEST_CASE("full configuration") {
  const ScenarioConfig cfg = parse_config(R"(
scenario = rotation
[constants]
units = si
hbar = 2*hbar
[parameters]
r0 = 2e-6
B0 = 0.35
omega = -2*pi*1e10
twice = 2*r0
[grid]
t = 0, 1e-12
x = range(-r0, r0, 5)
y = 0
[tolerances]
hermiticity = 1e-7
derivative = 1e-5
[output]
csv = out.csv
summary = out.json
)");
  CHECK(cfg.scenario == "rotation");
  CHECK(cfg.interaction == Interaction::Electromagnetic);
  CHECK(test::rel(cfg.constants.hbar, 2 * PhysicalConstants::si().hbar) < 1e-33);
  CHECK(cfg.parameter("twice") == 2 * cfg.parameter("r0"));
  CHECK(test::rel(cfg.parameter("omega"), -2 * real_pi() * Real("1e10")) < 1e-33);
  CHECK(cfg.parameters.front().first == "r0");
  CHECK(cfg.grid.t.samples.size() == 2);
  CHECK(cfg.grid.x.samples.size() == 5);
  CHECK(cfg.grid.x.samples[2] == 0);
  CHECK(cfg.grid.x.samples[4] == Real("2e-6"));
  CHECK(cfg.grid.z.samples == std::vector<Real>{Real(0)});
  CHECK(cfg.grid.size() == 10);
  CHECK(cfg.tolerances.hermiticity == 1e-7);
  CHECK(cfg.tolerances.dirac == 1e-9);
  CHECK(cfg.tolerances.derivative == 1e-5);
  CHECK(cfg.csv == "out.csv");
  CHECK(cfg.summary == "out.json");
  CHECK_THROWS_AS(cfg.parameter("xi"), ConfigError);
}

TEST_CASE("grid ordering has x fastest") {
  const ScenarioConfig cfg = parse_config("[grid]\nt = 0, 1\nx = 1, 2, 3\ny = 4, 5\nz = 6\n");
  CHECK(cfg.grid.size() == 12);
  CHECK(cfg.grid.row_length() == 3);
  const SpacetimePoint p1 = cfg.grid.point(1);
  CHECK((p1.t == 0 && p1.x == 2 && p1.y == 4));
  const SpacetimePoint p3 = cfg.grid.point(3);
  CHECK((p3.x == 1 && p3.y == 5));
  const SpacetimePoint p11 = cfg.grid.point(11);
  CHECK((p11.t == 1 && p11.x == 3 && p11.y == 5 && p11.z == 6));
}

TEST_CASE("natural units and scalar defaults") {
  const ScenarioConfig nat = parse_config("[constants]\nunits = natural\n");
  CHECK(nat.constants.c == 1);
  CHECK(nat.constants.hbar == 1);
  CHECK(parse_config("scenario = scalar\n").interaction == Interaction::Scalar);
  CHECK(parse_config("scenario = nonlinear\n").interaction == Interaction::Scalar);
  CHECK(parse_config("scenario = scalar\ninteraction = electromagnetic\n").interaction ==
        Interaction::Electromagnetic);
}

TEST_CASE("configuration errors") {
  CHECK(contains(config_error("scenario = spinning\n"), "unknown scenario"));
  CHECK(contains(config_error("colour = red\n"), "unknown key"));
  CHECK(contains(config_error("[extras]\na = 1\n"), "unknown section"));
  CHECK(contains(config_error("[constants]\nunits = cgs\n"), "units"));
  CHECK(contains(config_error("[constants]\nc = -1\n"), "positive"));
  CHECK(contains(config_error("[constants]\nh = 1\n"), "unknown constant"));
  CHECK(contains(config_error("[parameters]\nx = 1\n"), "shadows"));
  CHECK(contains(config_error("[parameters]\na = b\n"), "unknown identifier 'b'"));
  CHECK(contains(config_error("[parameters]\na = x\n"), "coordinate"));
  CHECK(contains(config_error("[parameters]\na = 1 +\n"), "line 2"));
  CHECK(contains(config_error("[state]\nbeta = 2*)x(\n"), "offset 2"));
  CHECK(contains(config_error("[state]\nwidth = 1\n"), "unknown state key"));
  CHECK(contains(config_error("[grid]\nw = 1\n"), "grid axes"));
  CHECK(contains(config_error("[grid]\nx = range(0, 1, 0)\n"), "positive integer"));
  CHECK(contains(config_error("[grid]\nx = range(0, 1, 2.5)\n"), "positive integer"));
  CHECK(contains(config_error("[grid]\nx = range(1, 0, 3)\n"), "max > min"));
  CHECK(contains(config_error("[grid]\nx = range(0, 1)\n"), "range takes"));
  CHECK(contains(config_error("[tolerances]\ndirac = 0\n"), "positive"));
  CHECK(contains(config_error("[output]\ncsv = ../x.csv\n"), "plain file names"));
  CHECK(contains(config_error("interaction = gravity\n"), "interaction"));
}

TEST_CASE("load_config") {
  const auto path = std::filesystem::temp_directory_path() / "rdi_test_config.ini";
  std::ofstream(path) << "scenario = rest\n[grid]\nx = 1, 2\n";
  const ScenarioConfig cfg = load_config(path.string());
  CHECK(cfg.scenario == "rest");
  CHECK(cfg.grid.size() == 2);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_config("/nonexistent/rdi.ini"), ConfigError);
}

TEST_CASE("presets parse and build") {
  CHECK(preset_names().size() >= 7);
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const ScenarioConfig cfg = preset_config(name);
    CHECK(cfg.grid.size() >= 1);
    CHECK_NOTHROW(build_state(cfg));
  }
  CHECK_THROWS_AS(preset_config("fig3"), ConfigError);
  const ScenarioConfig fig1 = preset_config("fig1");
  CHECK(fig1.grid.size() == 41 * 41);
  CHECK(test::rel(rotation_frequency(fig1), Real("-61.55e9")) < 1e-33);
}

TEST_CASE("parameter preconditions") {
  CHECK_THROWS_AS(build_state(parse_config("scenario = rotation\n[parameters]\nr0 = 1\nB0 = 1\nomega = c\n")),
                  ParameterError);
  CHECK_THROWS_AS(build_state(parse_config("scenario = rotation\n[parameters]\nr0 = 1\n")),
                  ConfigError);
  // Resonant frequency when omega is omitted
  const ScenarioConfig res = parse_config("scenario = rotation\n[parameters]\nr0 = 1e-6\nB0 = 0.35\n");
  CHECK(test::rel(rotation_frequency(res), Real("-61.55e9")) < 1e-3);

  // Peak speed of the trajectory over [0, T] and the grid times
  const std::string fast = "scenario = translation\n[parameters]\nL = 1\nT = 1e-9\nB0 = 1\n";
  CHECK_THROWS_AS(build_state(parse_config(fast)), ParameterError);
  const std::string custom_path =
      "scenario = translation\n[parameters]\nB0 = 1\n[state]\ntrajectory = 0.1*c*t^2\n[grid]\n";
  CHECK_NOTHROW(build_state(parse_config(custom_path + "t = 0, 2\n")));
  CHECK_THROWS_AS(build_state(parse_config(custom_path + "t = 0, 6\n")), ParameterError);

  CHECK_THROWS_AS(build_state(parse_config("scenario = custom\n[state]\nbeta = 0\n")), ConfigError);
  CHECK_THROWS_AS(
      build_state(parse_config("scenario = translation\n[parameters]\nB0 = 1\n[state]\ntrajectory = z\n")),
      ConfigError);
  CHECK_THROWS_AS(build_state(parse_config("scenario = soft-coulomb\n[parameters]\nB0 = 1\nxi = 0\n")),
                  ParameterError);
}

TEST_CASE("custom state fields") {
  const ScenarioConfig cfg = parse_config(R"(
[parameters]
w = 2
[state]
rho = exp(-w*(x^2 + y^2))
beta = 0.1*z
theta3 = t
u1 = 0.5
energy = m*c^2
)");
  const StateParametrization s = build_state(cfg);
  const Coords x = seed_coordinates({0, Real("0.5"), 0, Real(1)}, cfg.constants);
  CHECK(test::rel(s.log_rho(x).value(), Real("-0.5")) < 1e-33);
  CHECK(test::rel(s.log_rho(x).d(1), Real(-2)) < 1e-33);
  CHECK(test::rel(s.beta(x).value(), Real("0.1")) < 1e-33);
  CHECK(test::rel(s.angles[2](x).d(0), 1 / cfg.constants.c) < 1e-33);
  CHECK(s.velocity[0](x).value() == Real("0.5"));
  CHECK(!s.velocity[1]);
  CHECK(s.energy == cfg.constants.rest_energy());
}
