#pragma once

#include "rdi/real.hpp"

namespace rdi {

/// SI values of the constants entering the Dirac and Maxwell equations.
/// Every field may be overridden, e.g. to probe hbar -> 0 or c -> infinity.
struct PhysicalConstants {
  Real hbar;      ///< J s
  Real c;         ///< m / s
  Real e;         ///< C, magnitude of the electron charge
  Real m;         ///< kg
  Real epsilon0;  ///< F / m

  /// CODATA 2018 values for an electron.
  static PhysicalConstants si();
  /// hbar = c = e = m = epsilon0 = 1.
  static PhysicalConstants natural();

  Real mu0() const { return Real(1) / (epsilon0 * c * c); }
  Real rest_energy() const { return m * c * c; }

  /// Throws ParameterError unless every constant is strictly positive.
  void validate() const;
};

}  // namespace rdi
