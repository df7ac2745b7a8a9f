#include "rdi/aps.hpp"

#include <cmath>

namespace rdi {

ApsElement spinor_to_matrix(const ColumnSpinor& psi) {
  const auto& [p1, p2, p3, p4] = psi;
  return {p1 + p3, -std::conj(p2) + std::conj(p4), p2 + p4, std::conj(p1) - std::conj(p3)};
}

ColumnSpinor matrix_to_spinor(const ApsElement& m) {
  const Complex sum13 = m.a11, diff13 = std::conj(m.a22);
  const Complex sum24 = m.a21, diff42 = std::conj(m.a12);
  return {0.5 * (sum13 + diff13), 0.5 * (sum24 - diff42), 0.5 * (sum13 - diff13),
          0.5 * (sum24 + diff42)};
}

DensityAndAngle extract_beta_rho(const ApsElement& psi) {
  const Complex d = det(psi);
  const double scale = frobenius_norm(psi);
  if (std::abs(d) <= kSingularThreshold * scale * scale || scale == 0.0)
    throw SingularStateError("det(Psi) vanishes: the state has no Lorentz factorization");
  const double beta = std::arg(d);
  return {std::abs(d), beta <= -M_PI ? M_PI : beta};
}

}  // namespace rdi
