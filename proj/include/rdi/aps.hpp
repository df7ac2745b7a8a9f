#pragma once

// Algebra of physical space: 2x2 complex matrices standing in for Dirac
// spinors, paravectors (four-vectors), potentials and Lorentz operators.
//
// Mat2 is generic over its complex scalar so the same algebra runs on plain
// std::complex<double>, on extended precision and on complex jets.

#include "rdi/complex_jet.hpp"
#include "rdi/errors.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <type_traits>
#include <utility>

namespace rdi {

namespace detail {
template <class R>
struct ComplexOfImpl {
  using type = Cx<R>;
};
template <>
struct ComplexOfImpl<double> {
  using type = std::complex<double>;
};
}  // namespace detail

/// Complex scalar matching a real scalar type.
template <class R>
using ComplexOf = typename detail::ComplexOfImpl<R>::type;

template <class S>
S make_complex(double re, double im) {
  if constexpr (std::is_same_v<S, std::complex<double>>) {
    return {re, im};
  } else {
    using R = std::remove_cvref_t<decltype(std::declval<S>().re)>;
    return S(R(re), R(im));
  }
}

/// Row-major 2x2 matrix [[a11, a12], [a21, a22]].
template <class S>
struct Mat2 {
  S a11{}, a12{}, a21{}, a22{};

  static Mat2 identity() { return {one(), zero_s(), zero_s(), one()}; }
  static Mat2 zero() { return {zero_s(), zero_s(), zero_s(), zero_s()}; }
  /// sigma_0 = 1, then the three Pauli matrices.
  static Mat2 sigma(int mu) {
    switch (mu) {
      case 0:
        return identity();
      case 1:
        return {zero_s(), one(), one(), zero_s()};
      case 2:
        return {zero_s(), make_complex<S>(0, -1), make_complex<S>(0, 1), zero_s()};
      default:
        return {one(), zero_s(), zero_s(), make_complex<S>(-1, 0)};
    }
  }
  static S one() { return make_complex<S>(1, 0); }
  static S zero_s() { return make_complex<S>(0, 0); }

  Mat2& operator+=(const Mat2& o) {
    a11 += o.a11;
    a12 += o.a12;
    a21 += o.a21;
    a22 += o.a22;
    return *this;
  }
  Mat2& operator-=(const Mat2& o) {
    a11 -= o.a11;
    a12 -= o.a12;
    a21 -= o.a21;
    a22 -= o.a22;
    return *this;
  }
  Mat2 operator-() const { return {-a11, -a12, -a21, -a22}; }

  friend Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
  friend Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
  }
  friend Mat2 operator*(const S& s, const Mat2& m) {
    return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
  }
  friend Mat2 operator*(const Mat2& m, const S& s) { return s * m; }
};

template <class S>
S trace(const Mat2<S>& m) {
  return m.a11 + m.a22;
}

template <class S>
S det(const Mat2<S>& m) {
  return m.a11 * m.a22 - m.a12 * m.a21;
}

/// Clifford conjugation: the adjugate, so that bar(M) M = det(M) 1.
template <class S>
Mat2<S> bar(const Mat2<S>& m) {
  return {m.a22, -m.a12, -m.a21, m.a11};
}

template <class S>
Mat2<S> dagger(const Mat2<S>& m) {
  using std::conj;
  return {conj(m.a11), conj(m.a21), conj(m.a12), conj(m.a22)};
}

/// (bar M)^dagger, the combination carried by the mass term.
template <class S>
Mat2<S> bar_dagger(const Mat2<S>& m) {
  using std::conj;
  return {conj(m.a22), -conj(m.a21), -conj(m.a12), conj(m.a11)};
}

template <class S>
Mat2<S> inverse(const Mat2<S>& m) {
  const S inv_det = make_complex<S>(1, 0) / det(m);
  return inv_det * bar(m);
}

template <class S>
Mat2<S> hermitian_part(const Mat2<S>& m) {
  const Mat2<S> sum = m + dagger(m);
  return make_complex<S>(0.5, 0) * sum;
}

template <class S>
Mat2<S> antihermitian_part(const Mat2<S>& m) {
  const Mat2<S> diff = m - dagger(m);
  return make_complex<S>(0.5, 0) * diff;
}

/// Coefficients a_mu = Tr(M sigma_mu) / 2 of M = a_mu sigma_mu.
template <class S>
std::array<S, 4> pauli_coefficients(const Mat2<S>& m) {
  const S half = make_complex<S>(0.5, 0);
  const S a0 = half * (m.a11 + m.a22);
  const S a1 = half * (m.a12 + m.a21);
  const S a2 = half * times_i(m.a12 - m.a21);
  const S a3 = half * (m.a11 - m.a22);
  return {a0, a1, a2, a3};
}

template <class S>
Mat2<S> from_pauli(const std::array<S, 4>& a) {
  return {a[0] + a[3], a[1] - times_i(a[2]), a[1] + times_i(a[2]), a[0] - a[3]};
}

/// Real Pauli coefficients of a Hermitian matrix; the anti-Hermitian part is discarded.
template <class R>
std::array<R, 4> hermitian_coefficients(const Mat2<ComplexOf<R>>& m) {
  using std::real;
  using std::imag;
  const R half(0.5);
  return {half * (real(m.a11) + real(m.a22)), half * (real(m.a12) + real(m.a21)),
          half * (imag(m.a21) - imag(m.a12)), half * (real(m.a11) - real(m.a22))};
}

/// Hermitian matrix a_mu sigma_mu from real coefficients.
template <class R>
Mat2<ComplexOf<R>> paravector(const std::array<R, 4>& a) {
  using C = ComplexOf<R>;
  return {C(a[0] + a[3]), C(a[1], -a[2]), C(a[1], a[2]), C(a[0] - a[3])};
}

template <class R>
Mat2<ComplexOf<R>> scale(const R& s, const Mat2<ComplexOf<R>>& m) {
  return ComplexOf<R>(s) * m;
}

/// Frobenius norm for numeric (non-jet) scalars.
template <class S>
auto frobenius_norm(const Mat2<S>& m) {
  using std::abs;
  using std::sqrt;
  auto sq = [](const S& z) {
    using std::real;
    using std::imag;
    return real(z) * real(z) + imag(z) * imag(z);
  };
  return sqrt(sq(m.a11) + sq(m.a12) + sq(m.a21) + sq(m.a22));
}

// ---------------------------------------------------------------------------
// Lorentz operators

/// Spatial part of a proper velocity (dimensionless, dr/dtau / c).
template <class R = double>
struct ProperVelocity {
  R u1{}, u2{}, u3{};

  R u0() const {
    using std::sqrt;
    return sqrt(R(1) + u1 * u1 + u2 * u2 + u3 * u3);
  }
};

/// B(u) = (u^mu sigma_mu + 1) / sqrt(2 (1 + u^0)): Hermitian, unit determinant.
template <class R>
Mat2<ComplexOf<R>> boost(const ProperVelocity<R>& u) {
  using std::sqrt;
  using C = ComplexOf<R>;
  const R one_plus_u0 = R(1) + u.u0();
  const R norm = R(1) / sqrt(R(2) * one_plus_u0);
  return {C(norm * (one_plus_u0 + u.u3)), C(norm * u.u1, -(norm * u.u2)),
          C(norm * u.u1, norm * u.u2), C(norm * (one_plus_u0 - u.u3))};
}

namespace detail {

/// cos(sqrt(q)/2) and sin(sqrt(q)/2)/sqrt(q), regular at q = 0.
template <class R>
std::pair<R, R> half_angle_terms(const R& q) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  if constexpr (std::is_floating_point_v<R> || std::is_same_v<R, Real>) {
    if (q > R(1e-6)) {
      const R a = sqrt(q);
      return {cos(a / R(2)), sin(a / R(2)) / a};
    }
  } else {
    using V = typename R::value_type;
    if (q.value() > V(1e-6)) {
      const R a = sqrt(q);
      return {cos(a * V(0.5)), sin(a * V(0.5)) / a};
    }
  }
  // Power series in -q/4, summed to well past binary128 resolution.
  R c(1), s(0.5);
  R term_c(1), term_s(0.5);
  for (int k = 1; k <= 12; ++k) {
    term_c = -(term_c * q) / R(4 * (2 * k - 1) * (2 * k));
    term_s = -(term_s * q) / R(4 * (2 * k) * (2 * k + 1));
    c = c + term_c;
    s = s + term_s;
  }
  return {c, s};
}

}  // namespace detail

/// R(theta) = exp(-i theta^k sigma_k / 2): unitary, unit determinant.
template <class R>
Mat2<ComplexOf<R>> rotation(const std::array<R, 3>& theta) {
  using C = ComplexOf<R>;
  const R q = theta[0] * theta[0] + theta[1] * theta[1] + theta[2] * theta[2];
  const auto [c, s] = detail::half_angle_terms(q);
  const R s1 = s * theta[0], s2 = s * theta[1], s3 = s * theta[2];
  return {C(c, -s3), C(-s2, -s1), C(s2, -s1), C(c, s3)};
}

/// Psi = sqrt(rho) B(u) R(theta) e^{i beta / 2}.
template <class R>
Mat2<ComplexOf<R>> assemble_state(const R& rho, const ProperVelocity<R>& u,
                                  const std::array<R, 3>& theta, const R& beta) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  using C = ComplexOf<R>;
  if constexpr (std::is_floating_point_v<R> || std::is_same_v<R, Real>) {
    if (rho < R(0)) throw ParameterError("density must be non-negative");
  }
  const R half_beta = beta / R(2);
  const R amp = sqrt(rho);
  const C prefactor(amp * cos(half_beta), amp * sin(half_beta));
  return prefactor * (boost(u) * rotation(theta));
}

// ---------------------------------------------------------------------------
// Double-precision API

using Complex = std::complex<double>;
using ApsElement = Mat2<Complex>;
using ColumnSpinor = std::array<Complex, 4>;

/// Dirac column spinor -> 2x2 matrix spinor.
ApsElement spinor_to_matrix(const ColumnSpinor& psi);
ColumnSpinor matrix_to_spinor(const ApsElement& m);

/// Relative threshold below which det(Psi) counts as zero.
inline constexpr double kSingularThreshold = 1e-12;

struct DensityAndAngle {
  double rho;
  double beta;
};

/// rho = |det Psi| and the Yvon-Takabayashi angle beta = arg det Psi in (-pi, pi].
DensityAndAngle extract_beta_rho(const ApsElement& psi);

}  // namespace rdi
