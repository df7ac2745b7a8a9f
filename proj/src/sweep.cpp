#include "rdi/sweep.hpp"

#include "rdi/errors.hpp"

#include <atomic>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>

namespace rdi {

namespace {

PointRecord evaluate_point(const StateParametrization& state, const SpacetimePoint& p,
                           Interaction interaction, const Real& kappa, const Tolerances& tol) {
  PointRecord r;
  r.point = p;
  try {
    if (interaction == Interaction::Scalar) {
      const ScalarInversion s = scalar_inversion(state, p, kappa);
      r.v = s.v;
      r.scalar_residual = s.residual;
      r.evaluated = true;
      if (!(s.residual <= Real(tol.dirac))) r.status = PointStatus::NonPhysical;
      return r;
    }
    const ScenarioReport rep = analyze(state, p, std::numeric_limits<double>::infinity());
    r.ea = rep.ea;
    r.fields = rep.fields;
    r.current = rep.maxwell_current;
    r.hermiticity_residual = rep.hermiticity_residual;
    r.dirac_residual = rep.dirac_residual;
    r.evaluated = true;
    if (!(rep.hermiticity_residual <= tol.hermiticity)) {
      r.status = PointStatus::NonPhysical;
    } else if (!(rep.dirac_residual <= Real(tol.dirac))) {
      r.status = PointStatus::Failed;
      r.message = "Dirac residual " + format_number(rep.dirac_residual) + " above tolerance";
    }
  } catch (const SingularStateError& e) {
    r.status = PointStatus::Singular;
    r.message = e.what();
  } catch (const Error& e) {
    r.status = PointStatus::Failed;
    r.message = e.what();
  }
  return r;
}

}  // namespace

const char* to_string(PointStatus s) {
  switch (s) {
    case PointStatus::Ok: return "ok";
    case PointStatus::NonPhysical: return "non-physical";
    case PointStatus::Singular: return "singular";
    case PointStatus::Failed: return "failed";
  }
  return "unknown";
}

std::string format_number(const Real& x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", to_double(x));
  return buf;
}

SweepResult run_sweep(const StateParametrization& state, const Grid& grid,
                      Interaction interaction, const Real& kappa, const Tolerances& tol,
                      int threads) {
  SweepResult result;
  result.interaction = interaction;
  const std::size_t n = grid.size();
  const std::size_t row = grid.row_length();
  const std::size_t rows = row == 0 ? 0 : n / row;
  result.records.resize(n);

  std::atomic<std::size_t> next_row{0};
  auto worker = [&] {
    for (std::size_t r = next_row++; r < rows; r = next_row++)
      for (std::size_t i = r * row; i < (r + 1) * row; ++i)
        result.records[i] = evaluate_point(state, grid.point(i), interaction, kappa, tol);
  };
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), std::max<std::size_t>(rows, 1));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SweepSummary& s = result.summary;
  s.points = n;
  for (const auto& r : result.records) {
    if (r.status == PointStatus::NonPhysical) ++s.nonphysical;
    if (r.status == PointStatus::Singular || r.status == PointStatus::Failed) ++s.failed;
    if (!r.evaluated) continue;
    s.max_hermiticity_residual = std::max(s.max_hermiticity_residual, r.hermiticity_residual);
    const Real d = interaction == Interaction::Scalar ? r.scalar_residual : r.dirac_residual;
    s.max_dirac_residual = std::max(s.max_dirac_residual, to_double(d));
  }
  return result;
}

void write_csv(std::ostream& out, const SweepResult& result) {
  const bool scalar = result.interaction == Interaction::Scalar;
  out << "t,x,y,z,";
  if (scalar)
    out << "V,scalar_residual";
  else
    out << "eA0,eA1,eA2,eA3,E1,E2,E3,B1,B2,B3,J0,J1,J2,J3,hermiticity_residual,dirac_residual";
  out << ",status\n";
  for (const auto& r : result.records) {
    auto num = [&](const Real& x) { return r.evaluated ? format_number(x) : std::string("nan"); };
    out << format_number(r.point.t) << ',' << format_number(r.point.x) << ','
        << format_number(r.point.y) << ',' << format_number(r.point.z);
    if (scalar) {
      out << ',' << num(r.v) << ',' << num(r.scalar_residual);
    } else {
      for (const auto& a : r.ea) out << ',' << num(a);
      for (const auto& e : r.fields.e) out << ',' << num(e);
      for (const auto& b : r.fields.b) out << ',' << num(b);
      for (const auto& j : r.current) out << ',' << num(j);
      out << ',' << num(Real(r.hermiticity_residual)) << ',' << num(r.dirac_residual);
    }
    out << ',' << to_string(r.status) << '\n';
  }
}

}  // namespace rdi
