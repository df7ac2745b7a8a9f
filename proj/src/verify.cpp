#include "rdi/verify.hpp"

#include "rdi/physicality.hpp"
#include "rdi/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace rdi {

namespace {

constexpr std::size_t kMaxCheckedPoints = 200;
constexpr double kStepFraction = 1e-6;

template <std::size_t N>
Real norm(const std::array<Real, N>& v) {
  Real s = 0;
  for (const auto& x : v) s += x * x;
  return sqrt(s);
}

template <std::size_t N>
Real relative_error(const std::array<Real, N>& got, const std::array<Real, N>& want) {
  std::array<Real, N> d;
  for (std::size_t i = 0; i < N; ++i) d[i] = got[i] - want[i];
  const Real scale = norm(want);
  if (scale == 0) return norm(d);
  return norm(d) / scale;
}

Real relative_error(const Real& got, const Real& want) {
  return relative_error(std::array<Real, 1>{got}, std::array<Real, 1>{want});
}

struct Worst {
  double value = 0;
  void add(const Real& x) {
    const double v = to_double(x);
    value = std::isnan(v) ? std::numeric_limits<double>::infinity() : std::max(value, v);
  }
};

Check make(const std::string& name, double value, double tolerance, std::string detail = {}) {
  return {name, value <= tolerance, value, tolerance, std::move(detail)};
}

std::vector<SpacetimePoint> sample_points(const Grid& grid) {
  const std::size_t n = grid.size();
  const std::size_t stride = std::max<std::size_t>(1, n / kMaxCheckedPoints);
  std::vector<SpacetimePoint> out;
  for (std::size_t i = 0; i < n && out.size() < kMaxCheckedPoints; i += stride)
    out.push_back(grid.point(i));
  return out;
}

std::vector<std::pair<std::string, ScalarField>> scalar_fields(const StateParametrization& s) {
  std::vector<std::pair<std::string, ScalarField>> out = {{"log_rho", s.log_rho}};
  for (int i = 0; i < 3; ++i) {
    if (s.velocity[i]) out.emplace_back("u" + std::to_string(i + 1), s.velocity[i]);
    if (s.angles[i]) out.emplace_back("theta" + std::to_string(i + 1), s.angles[i]);
  }
  if (s.beta) out.emplace_back("beta", s.beta);
  if (s.spin_phase) out.emplace_back("spin_phase", s.spin_phase);
  return out;
}

/// Largest spatial span of the grid, or the Compton length for a single point.
Real grid_length(const Grid& g, const PhysicalConstants& k) {
  auto span = [](const GridAxis& a) {
    const auto [lo, hi] = std::minmax_element(a.samples.begin(), a.samples.end());
    return *hi - *lo;
  };
  Real len = std::max({span(g.x), span(g.y), span(g.z)});
  if (len == 0) len = k.hbar / (k.m * k.c);
  return len;
}

struct Engine {
  const StateParametrization& state;
  const PhysicalConstants& k;

  ScenarioReport at(const SpacetimePoint& p) const {
    return analyze(state, p, std::numeric_limits<double>::infinity());
  }
};

void oracle_checks(const ScenarioConfig& cfg, const StateParametrization& state,
                   const std::vector<SpacetimePoint>& pts,
                   const std::function<ClosedForm(const SpacetimePoint&)>& oracle,
                   std::vector<Check>& out) {
  const PhysicalConstants& k = cfg.constants;
  const Engine eng{state, k};
  Worst ea, ee, eb, j;
  for (const auto& p : pts) {
    const ScenarioReport r = eng.at(p);
    const ClosedForm cf = oracle(p);
    const std::array<Real, 4> contra = {r.ea[0], -r.ea[1], -r.ea[2], -r.ea[3]};
    ea.add(relative_error(contra, cf.ea));
    std::array<Real, 3> e, b, cur;
    for (int i = 0; i < 3; ++i) {
      e[i] = r.fields.e[i] * k.e;
      b[i] = r.fields.b[i] * k.e;
      cur[i] = r.maxwell_current[i + 1] * k.mu0() * k.e;
    }
    ee.add(relative_error(e, cf.ee));
    eb.add(relative_error(b, cf.eb));
    j.add(relative_error(cur, cf.mu0_e_j));
  }
  out.push_back(make("oracle-potential", ea.value, kOracleTolerance));
  out.push_back(make("oracle-electric-field", ee.value, kOracleTolerance));
  out.push_back(make("oracle-magnetic-field", eb.value, kOracleTolerance));
  out.push_back(make("oracle-current", j.value, kCurrentTolerance));
}

/// Runs `gap(k)` for hbar scaled by 1, 1/2, 1/4 and reports the deviation from linearity.
Check hbar_scaling(const std::string& name, const PhysicalConstants& k,
                   const std::function<Real(const PhysicalConstants&)>& gap) {
  const Real base = gap(k);
  Worst w;
  for (const Real& s : {Real("0.5"), Real("0.25")}) {
    PhysicalConstants ks = k;
    ks.hbar *= s;
    w.add(relative_error(gap(ks), base * s));
  }
  return make(name, w.value, kLimitTolerance);
}

void rotation_checks(const ScenarioConfig& cfg, const StateParametrization& state,
                     const std::vector<SpacetimePoint>& pts, std::vector<Check>& out) {
  const PhysicalConstants& k = cfg.constants;
  const RotationScenario rs{cfg.parameter("r0"), rotation_frequency(cfg), cfg.parameter("B0")};
  oracle_checks(cfg, state, pts, [&](const SpacetimePoint& p) { return rotation_closed_form(rs, p, k); },
                out);

  auto gap_error = [&](const PhysicalConstants& kk, const SpacetimePoint& p) {
    const StateParametrization st = rotation_state({rs.r0, rs.omega, rs.b0}, kk);
    const ScenarioReport r = analyze(st, p, std::numeric_limits<double>::infinity());
    const Vec3 cl = rotation_classical_field(rs, p, kk);
    std::array<Real, 3> d;
    for (int i = 0; i < 3; ++i) d[i] = r.fields.e[i] * kk.e - cl[i];
    return norm(d);
  };
  Worst gap;
  for (const auto& p : pts) gap.add(relative_error(gap_error(k, p), rotation_quantum_gap(rs, k)));
  out.push_back(make("quantum-gap-rotation", gap.value, kLimitTolerance));
  out.push_back(hbar_scaling("hbar-scaling-rotation", k, [&](const PhysicalConstants& kk) {
    return gap_error(kk, pts.front());
  }));

  RotationScenario at_resonance = rs;
  at_resonance.omega = resonant_frequency(rs.b0, k);
  const SpacetimePoint& p0 = pts.front();
  out.push_back(make("resonance-constancy",
                     to_double(rotation_current_variation(at_resonance, p0.x, p0.y, k)),
                     kResonanceTolerance));

  const PhysicalityVerdict v = synchrotron_check(rs, k);
  out.push_back(make("physicality-synchrotron", to_double(v.ratio), kRadiationRatioThreshold,
                     "radiated " + format_number(v.radiated_energy) + " J per period, kinetic " +
                         format_number(v.kinetic_energy) + " J"));
}

void translation_checks(const ScenarioConfig& cfg, const StateParametrization& state,
                        const std::vector<SpacetimePoint>& pts, std::vector<Check>& out) {
  const PhysicalConstants& k = cfg.constants;
  if (cfg.state_expression("trajectory") || !cfg.has_parameter("L") || !cfg.has_parameter("T"))
    return;
  const TranslationScenario ts =
      TranslationScenario::sinusoidal(cfg.parameter("L"), cfg.parameter("T"), cfg.parameter("B0"));
  oracle_checks(cfg, state, pts,
                [&](const SpacetimePoint& p) { return translation_closed_form(ts, p, k); }, out);

  auto gap_of = [&](const PhysicalConstants& kk, const SpacetimePoint& p) {
    const StateParametrization st = translation_state({ts.trajectory, ts.b0}, kk);
    const ScenarioReport r = analyze(st, p, std::numeric_limits<double>::infinity());
    return translation_classical_field(ts, p, kk)[0] - r.fields.e[0] * kk.e;
  };
  Worst gap;
  for (const auto& p : pts) gap.add(relative_error(gap_of(k, p), translation_quantum_gap(ts, p.t, k)));
  out.push_back(make("quantum-gap-translation", gap.value, kLimitTolerance));
  out.push_back(hbar_scaling("hbar-scaling-translation", k, [&](const PhysicalConstants& kk) {
    return gap_of(kk, pts.front());
  }));

  const PhysicalityVerdict v = bremsstrahlung_check(ts, cfg.parameter("T"), k);
  out.push_back(make("physicality-bremsstrahlung", to_double(v.ratio), kRadiationRatioThreshold,
                     "radiated " + format_number(v.radiated_energy) + " J, kinetic " +
                         format_number(v.kinetic_energy) + " J"));
}

}  // namespace

double derivative_check(const StateParametrization& state, const SpacetimePoint& p,
                        const std::array<Real, 4>& steps, const Real& length) {
  const PhysicalConstants& k = state.constants;
  const Coords base = seed_coordinates(p, k);
  std::array<Real, 4> x0;
  for (int mu = 0; mu < 4; ++mu) x0[mu] = base[mu].value();

  double worst = 0;
  for (const auto& [name, field] : scalar_fields(state)) {
    auto value_at = [&](const std::array<Real, 4>& x) {
      Coords c;
      for (int mu = 0; mu < 4; ++mu) c[mu] = StateJet(x[mu]);
      return field(c).value();
    };
    auto shifted = [&](int a, int sa, int b, int sb) {
      std::array<Real, 4> x = x0;
      if (a >= 0) x[a] += steps[a] * Real(sa);
      if (b >= 0) x[b] += steps[b] * Real(sb);
      return value_at(x);
    };
    const StateJet jet = field(base);
    const Real f0 = jet.value();

    std::array<Real, 4> ad1, fd1;
    std::array<Real, 16> ad2, fd2;
    for (int mu = 0; mu < 4; ++mu) {
      ad1[mu] = jet.d(mu);
      fd1[mu] = (shifted(mu, 1, -1, 0) - shifted(mu, -1, -1, 0)) / (Real(2) * steps[mu]);
      for (int nu = 0; nu < 4; ++nu) {
        ad2[mu * 4 + nu] = jet.d2(mu, nu);
        if (mu == nu)
          fd2[mu * 4 + nu] = (shifted(mu, 1, -1, 0) - Real(2) * f0 + shifted(mu, -1, -1, 0)) /
                             (steps[mu] * steps[mu]);
        else
          fd2[mu * 4 + nu] = (shifted(mu, 1, nu, 1) - shifted(mu, 1, nu, -1) -
                              shifted(mu, -1, nu, 1) + shifted(mu, -1, nu, -1)) /
                             (Real(4) * steps[mu] * steps[nu]);
      }
    }
    std::array<Real, 4> d1;
    std::array<Real, 16> d2;
    for (int i = 0; i < 4; ++i) d1[i] = fd1[i] - ad1[i];
    for (int i = 0; i < 16; ++i) d2[i] = fd2[i] - ad2[i];
    const Real grad = std::max(norm(ad1), norm(ad2) * length);
    const Real curvature = std::max(norm(ad2), norm(ad1) / length);
    if (grad > 0) worst = std::max(worst, to_double(norm(d1) / grad));
    else worst = std::max(worst, to_double(norm(d1)));
    if (curvature > 0) worst = std::max(worst, to_double(norm(d2) / curvature));
    else worst = std::max(worst, to_double(norm(d2)));
  }
  return worst;
}

Real rotation_current_variation(const RotationScenario& s, const Real& x, const Real& y,
                                const PhysicalConstants& k, int samples) {
  const StateParametrization st = rotation_state({s.r0, s.omega, s.b0}, k);
  const Real period = Real(2) * real_pi() / abs(s.omega);
  Real lo = std::numeric_limits<double>::infinity(), hi = 0;
  for (int i = 0; i < samples; ++i) {
    const SpacetimePoint p{period * Real(i) / Real(samples), x, y, Real(0)};
    const Real n = norm(analyze(st, p, std::numeric_limits<double>::infinity()).maxwell_current);
    lo = std::min(lo, n);
    hi = std::max(hi, n);
  }
  return hi > 0 ? (hi - lo) / hi : Real(0);
}

std::vector<Check> verify(const ScenarioConfig& cfg, int threads) {
  const StateParametrization state = build_state(cfg);
  const PhysicalConstants& k = cfg.constants;
  std::vector<Check> out;

  const Real kappa = cfg.has_parameter("kappa") ? cfg.parameter("kappa") : Real(0);
  const SweepResult sweep =
      run_sweep(state, cfg.grid, cfg.interaction, kappa, cfg.tolerances, threads);
  out.push_back(make("grid-failures", static_cast<double>(sweep.summary.failed), 0));
  const std::vector<SpacetimePoint> pts = sample_points(cfg.grid);

  if (cfg.interaction == Interaction::Scalar) {
    out.push_back(make("scalar-remainder", sweep.summary.max_dirac_residual, cfg.tolerances.dirac));
    std::function<Real(const Real&)> oracle;
    if (cfg.scenario == "scalar")
      oracle = [&](const Real& z) {
        return scalar_potential(cfg.parameter("xi"), cfg.parameter("energy"), z, k);
      };
    if (cfg.scenario == "nonlinear")
      oracle = [&](const Real& z) {
        return nonlinear_scalar_potential(cfg.parameter("xi"), kappa, z, k);
      };
    if (oracle) {
      Worst w;
      for (const auto& r : sweep.records)
        if (r.status == PointStatus::Ok) w.add(relative_error(r.v, oracle(r.point.z)));
      out.push_back(make("oracle-scalar-potential", w.value, kOracleTolerance));
    }
  } else {
    out.push_back(make("hermiticity", sweep.summary.max_hermiticity_residual,
                       cfg.tolerances.hermiticity));
    out.push_back(make("dirac-residual", sweep.summary.max_dirac_residual, cfg.tolerances.dirac));
    Worst hom;
    for (const auto& p : pts) {
      const SpinorField psi = evaluate_state(state, p);
      const FourPotential a = hermiticity_gate(invert_potential(psi, k),
                                               std::numeric_limits<double>::infinity());
      const HomogeneousMaxwell h = homogeneous_maxwell(a, k);
      hom.add(std::max(h.divergence_b, h.faraday));
    }
    out.push_back(make("maxwell-homogeneous", hom.value, kHomogeneousTolerance));

    if (cfg.scenario == "rotation") rotation_checks(cfg, state, pts, out);
    if (cfg.scenario == "translation") translation_checks(cfg, state, pts, out);
    const bool stationary = !cfg.has_parameter("energy") || cfg.parameter("energy") == 0;
    if ((cfg.scenario == "soft-coulomb" || cfg.scenario == "confined-3d") && stationary) {
      const Profile f = confinement_profile(cfg);
      Worst w;
      for (const auto& p : pts)
        w.add(relative_error(analyze(state, p, std::numeric_limits<double>::infinity()).ea[0],
                             confined_3d_potential(f, p.z, k)));
      out.push_back(make("oracle-potential", w.value, kOracleTolerance));
    }
    if (cfg.scenario == "boosted-landau") {
      const BoostedFields bf = boosted_landau_fields(cfg.parameter("u2"), cfg.parameter("B0"), k);
      Worst e, b;
      for (const auto& p : pts) {
        const ScenarioReport r = analyze(state, p, std::numeric_limits<double>::infinity());
        e.add(relative_error(r.fields.e, bf.e));
        b.add(relative_error(r.fields.b, bf.b));
      }
      out.push_back(make("oracle-electric-field", e.value, kOracleTolerance));
      out.push_back(make("oracle-magnetic-field", b.value, kOracleTolerance));
    }
  }

  const Real length = grid_length(cfg.grid, k);
  const Real h = length * Real(kStepFraction);
  Worst fd;
  for (const auto& p : pts) fd.add(Real(derivative_check(state, p, {h, h, h, h}, length)));
  out.push_back(make("derivatives-vs-finite-differences", fd.value, cfg.tolerances.derivative));
  return out;
}

}  // namespace rdi
