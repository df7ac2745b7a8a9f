#pragma once

#include "rdi/aps.hpp"
#include "rdi/real.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <random>

namespace rdi::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Complex random_complex() { return {uniform(-1, 1), uniform(-1, 1)}; }

inline ApsElement random_matrix() {
  return {random_complex(), random_complex(), random_complex(), random_complex()};
}

inline double distance(const ApsElement& a, const ApsElement& b) {
  return frobenius_norm(ApsElement(a - b));
}

inline double rel(const Real& got, const Real& want) {
  using boost::multiprecision::abs;
  if (want == 0) return to_double(abs(got));
  return to_double(abs(got - want) / abs(want));
}

template <std::size_t N>
double rel(const std::array<Real, N>& got, const std::array<Real, N>& want) {
  Real d = 0, s = 0;
  for (std::size_t i = 0; i < N; ++i) {
    d += (got[i] - want[i]) * (got[i] - want[i]);
    s += want[i] * want[i];
  }
  if (s == 0) return to_double(sqrt(d));
  return to_double(sqrt(d / s));
}

}  // namespace rdi::test
