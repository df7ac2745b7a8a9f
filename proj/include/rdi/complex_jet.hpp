#pragma once

// Complex numbers over an arbitrary real scalar: Real, or a jet of Real.
// std::complex is unspecified for non-builtin value types, hence this small
// replacement with only what the matrix code needs.

#include "rdi/jet.hpp"

#include <complex>

namespace rdi {

template <class T>
struct Cx {
  T re{};
  T im{};

  Cx() = default;
  Cx(const T& r) : re(r), im(T(0)) {}  // NOLINT: real-to-complex promotion
  Cx(const T& r, const T& i) : re(r), im(i) {}

  Cx& operator+=(const Cx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Cx& operator-=(const Cx& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Cx operator-() const { return {-re, -im}; }

  friend Cx operator+(Cx a, const Cx& b) { return a += b; }
  friend Cx operator-(Cx a, const Cx& b) { return a -= b; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator/(const Cx& a, const Cx& b) {
    const T inv = reciprocal_of(b.re * b.re + b.im * b.im);
    return {(a.re * b.re + a.im * b.im) * inv, (a.im * b.re - a.re * b.im) * inv};
  }

 private:
  static T reciprocal_of(const T& x) {
    if constexpr (requires { reciprocal(x); })
      return reciprocal(x);
    else
      return T(1) / x;
  }
};

template <class T>
Cx<T> conj(const Cx<T>& z) {
  return {z.re, -z.im};
}
template <class T>
const T& real(const Cx<T>& z) {
  return z.re;
}
template <class T>
const T& imag(const Cx<T>& z) {
  return z.im;
}
/// i * z
template <class T>
Cx<T> times_i(const Cx<T>& z) {
  return {-z.im, z.re};
}
template <class T>
std::complex<T> times_i(const std::complex<T>& z) {
  return {-z.imag(), z.real()};
}

/// e^{z} for a complex value.
template <class T>
Cx<T> cexp(const Cx<T>& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  const T mag = exp(z.re);
  return {mag * cos(z.im), mag * sin(z.im)};
}

/// e^{i phi} for real phi.
template <class T>
Cx<T> unit_phase(const T& phi) {
  using std::cos;
  using std::sin;
  return {cos(phi), sin(phi)};
}

template <class T, int N>
using CJet = Cx<Jet<T, N>>;

/// Complex jet differentiated along `mu`.
template <class T, int N>
CJet<T, (N > 0 ? N - 1 : 0)> derivative(const CJet<T, N>& z, int mu) {
  return {z.re.derivative(mu), z.im.derivative(mu)};
}

template <int M, class T, int N>
CJet<T, M> truncate(const CJet<T, N>& z) {
  return {z.re.template truncate<M>(), z.im.template truncate<M>()};
}

template <class T, int N>
Cx<T> value_of(const CJet<T, N>& z) {
  return {z.re.value(), z.im.value()};
}

}  // namespace rdi
