#pragma once

// Inversion over a spacetime grid, parallel by rows, with output in grid order
// regardless of the number of threads.

#include "rdi/config.hpp"
#include "rdi/engine.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace rdi {

enum class PointStatus { Ok, NonPhysical, Singular, Failed };

const char* to_string(PointStatus s);

struct PointRecord {
  SpacetimePoint point{};
  PointStatus status = PointStatus::Ok;
  std::string message;
  bool evaluated = false;  ///< the numeric columns hold results
  // Electromagnetic interaction
  std::array<Real, 4> ea{};  ///< covariant, kg m / s
  FieldStrength fields{};
  std::array<Real, 4> current{};  ///< Maxwell J^nu, A / m^2
  double hermiticity_residual = 0;
  Real dirac_residual{0};
  // Scalar interaction
  Real v{0};
  Real scalar_residual{0};
};

struct SweepSummary {
  std::size_t points = 0;
  std::size_t nonphysical = 0;
  std::size_t failed = 0;  ///< singular or domain failures
  double max_hermiticity_residual = 0;
  double max_dirac_residual = 0;  ///< or the scalar remainder for scalar interactions
};

struct SweepResult {
  Interaction interaction = Interaction::Electromagnetic;
  std::vector<PointRecord> records;
  SweepSummary summary;
};

/// Evaluates every grid point with `threads` workers (at least one).
SweepResult run_sweep(const StateParametrization& state, const Grid& grid,
                      Interaction interaction, const Real& kappa, const Tolerances& tol,
                      int threads);

/// One header row, then one row per point; numbers with 17 significant digits.
void write_csv(std::ostream& out, const SweepResult& result);

/// %.17g of the value rounded to double.
std::string format_number(const Real& x);

}  // namespace rdi
