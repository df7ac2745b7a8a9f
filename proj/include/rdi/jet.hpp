#pragma once

// Forward-mode jets over the four spacetime coordinates (ct, x, y, z).
//
// A Jet<T, N> is a multivariate Taylor polynomial truncated at total degree N.
// Coefficients are stored per monomial, so mixed partials are symmetric by
// construction. Differentiating a jet lowers its order by one; this is how the
// engine turns a third-order state into a second-order potential, first-order
// fields and a plain current.

#include "rdi/errors.hpp"
#include "rdi/real.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace rdi {

inline constexpr int kSpacetimeDims = 4;

namespace detail {

constexpr int monomial_count(int order) {
  // C(order + 4, 4)
  return (order + 1) * (order + 2) * (order + 3) * (order + 4) / 24;
}

struct ProductTerm {
  int lhs;
  int rhs;
  int out;
};

template <int N>
struct MonomialTable {
  static constexpr int kSize = monomial_count(N);

  std::array<std::array<int, kSpacetimeDims>, kSize> exponents{};
  std::array<int, kSize> degree{};
  std::vector<ProductTerm> products;

  int index_of(const std::array<int, kSpacetimeDims>& e) const {
    const int d = e[0] + e[1] + e[2] + e[3];
    if (d > N) return -1;
    return lookup[((e[0] * (N + 1) + e[1]) * (N + 1) + e[2]) * (N + 1) + e[3]];
  }

  static const MonomialTable& get() {
    static const MonomialTable table;
    return table;
  }

 private:
  std::vector<int> lookup;

  MonomialTable() : lookup((N + 1) * (N + 1) * (N + 1) * (N + 1), -1) {
    int k = 0;
    for (int d = 0; d <= N; ++d) {
      for (int a = d; a >= 0; --a) {
        for (int b = d - a; b >= 0; --b) {
          for (int c = d - a - b; c >= 0; --c) {
            const std::array<int, kSpacetimeDims> e{a, b, c, d - a - b - c};
            exponents[k] = e;
            degree[k] = d;
            lookup[((e[0] * (N + 1) + e[1]) * (N + 1) + e[2]) * (N + 1) + e[3]] = k;
            ++k;
          }
        }
      }
    }
    for (int i = 0; i < kSize; ++i) {
      for (int j = 0; j < kSize; ++j) {
        if (degree[i] + degree[j] > N) continue;
        std::array<int, kSpacetimeDims> e{};
        for (int m = 0; m < kSpacetimeDims; ++m) e[m] = exponents[i][m] + exponents[j][m];
        products.push_back({i, j, index_of(e)});
      }
    }
  }
};

}  // namespace detail

template <class T, int N>
class Jet {
  static_assert(N >= 0 && N <= 4, "jets are supported up to fourth order");

 public:
  using value_type = T;
  static constexpr int kOrder = N;
  static constexpr int kSize = detail::monomial_count(N);

  Jet() { coeffs_.fill(T(0)); }
  Jet(const T& value) {  // NOLINT: implicit promotion of constants
    coeffs_.fill(T(0));
    coeffs_[0] = value;
  }
  /// Coordinate jet: value `v`, unit gradient along `axis`, no curvature.
  static Jet variable(const T& v, int axis) {
    Jet j(v);
    if constexpr (N >= 1) j.coeffs_[1 + axis] = T(1);
    return j;
  }

  const T& value() const { return coeffs_[0]; }

  /// First partial along `mu`.
  T d(int mu) const {
    if constexpr (N >= 1) return coeffs_[1 + mu];
    return T(0);
  }

  /// Second partial; symmetric in (mu, nu).
  T d2(int mu, int nu) const {
    std::array<int, kSpacetimeDims> e{};
    ++e[mu];
    ++e[nu];
    return partial(e);
  }

  /// Mixed partial for an arbitrary multi-index of total degree <= N.
  T partial(const std::array<int, kSpacetimeDims>& e) const {
    const int k = table().index_of(e);
    if (k < 0) return T(0);
    T factorial(1);
    for (int m : e)
      for (int q = 2; q <= m; ++q) factorial *= T(q);
    return coeffs_[k] * factorial;
  }

  std::array<T, kSpacetimeDims> gradient() const {
    return {d(0), d(1), d(2), d(3)};
  }

  /// Taylor coefficient storage, in the monomial order of the table.
  const std::array<T, kSize>& coefficients() const { return coeffs_; }
  std::array<T, kSize>& coefficients() { return coeffs_; }

  /// Partial derivative along `mu`; one order lower.
  Jet<T, (N > 0 ? N - 1 : 0)> derivative(int mu) const {
    Jet<T, (N > 0 ? N - 1 : 0)> out;
    if constexpr (N > 0) {
      const auto& lower = detail::MonomialTable<N - 1>::get();
      for (int k = 0; k < detail::monomial_count(N - 1); ++k) {
        auto e = lower.exponents[k];
        ++e[mu];
        out.coefficients()[k] = coeffs_[table().index_of(e)] * T(e[mu]);
      }
    }
    return out;
  }

  /// Drops all terms above order M.
  template <int M>
  Jet<T, M> truncate() const {
    static_assert(M <= N);
    Jet<T, M> out;
    for (int k = 0; k < detail::monomial_count(M); ++k) out.coefficients()[k] = coeffs_[k];
    return out;
  }

  Jet& operator+=(const Jet& o) {
    for (int k = 0; k < kSize; ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (int k = 0; k < kSize; ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  Jet& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  Jet& operator/=(const T& s) {
    for (auto& c : coeffs_) c /= s;
    return *this;
  }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  Jet& operator/=(const Jet& o) { return *this = *this / o; }

  Jet operator-() const {
    Jet r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, const T& b) {
    a.coeffs_[0] += b;
    return a;
  }
  friend Jet operator+(const T& b, Jet a) { return a + b; }
  friend Jet operator-(Jet a, const T& b) {
    a.coeffs_[0] -= b;
    return a;
  }
  friend Jet operator-(const T& b, const Jet& a) { return -a + b; }
  friend Jet operator*(Jet a, const T& s) { return a *= s; }
  friend Jet operator*(const T& s, Jet a) { return a *= s; }
  friend Jet operator/(Jet a, const T& s) { return a /= s; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (const auto& p : table().products) r.coeffs_[p.out] += a.coeffs_[p.lhs] * b.coeffs_[p.rhs];
    return r;
  }
  friend Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }
  friend Jet operator/(const T& s, const Jet& b) { return reciprocal(b) * s; }

  /// Applies a scalar function given its derivatives at value(): f, f', ..., f^(N).
  Jet compose(const std::array<T, N + 1>& derivs) const {
    Jet h = *this;
    h.coeffs_[0] = T(0);
    Jet result(derivs[0]);
    if constexpr (N >= 1) {
      Jet power = h;
      T factorial(1);
      for (int k = 1; k <= N; ++k) {
        factorial *= T(k);
        result += power * (derivs[k] / factorial);
        if (k < N) power = power * h;
      }
    }
    return result;
  }

 private:
  static const detail::MonomialTable<N>& table() { return detail::MonomialTable<N>::get(); }

  std::array<T, kSize> coeffs_;
};

// Elementary functions, exact to order N via the chain rule. Each builds the
// list of derivatives at the expansion point and composes.

template <class T, int N>
Jet<T, N> reciprocal(const Jet<T, N>& x) {
  const T& v = x.value();
  if (v == T(0)) throw DomainError("division by a jet with zero value");
  std::array<T, N + 1> d;
  T inv = T(1) / v;
  T term = inv;
  for (int k = 0; k <= N; ++k) {
    d[k] = term;
    term *= -T(k + 1) * inv;
  }
  return x.compose(d);
}

template <class T, int N>
Jet<T, N> exp(const Jet<T, N>& x) {
  using std::exp;
  std::array<T, N + 1> d;
  d.fill(exp(x.value()));
  return x.compose(d);
}

template <class T, int N>
Jet<T, N> log(const Jet<T, N>& x) {
  using std::log;
  const T& v = x.value();
  if (!(v > T(0))) throw DomainError("log of a non-positive value");
  std::array<T, N + 1> d;
  d[0] = log(v);
  T term = T(1) / v;
  for (int k = 1; k <= N; ++k) {
    d[k] = term;
    term *= -T(k) / v;
  }
  return x.compose(d);
}

/// x^p for real p; requires x > 0 unless p is a non-negative integer.
template <class T, int N>
Jet<T, N> pow(const Jet<T, N>& x, const T& p) {
  using std::pow;
  const T& v = x.value();
  if (!(v > T(0))) throw DomainError("real power of a non-positive value");
  std::array<T, N + 1> d;
  T coeff(1);
  for (int k = 0; k <= N; ++k) {
    d[k] = coeff * pow(v, p - T(k));
    coeff *= (p - T(k));
  }
  return x.compose(d);
}

/// Integer power by repeated multiplication; valid for negative bases.
template <class T, int N>
Jet<T, N> pow(const Jet<T, N>& x, int n) {
  if (n < 0) return reciprocal(pow(x, -n));
  Jet<T, N> result(T(1));
  Jet<T, N> base = x;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

template <class T, int N>
Jet<T, N> sqrt(const Jet<T, N>& x) {
  using std::sqrt;
  const T& v = x.value();
  if (v < T(0)) throw DomainError("sqrt of a negative value");
  if (v == T(0)) {
    if constexpr (N == 0) return Jet<T, N>(T(0));
    throw DomainError("sqrt is not differentiable at zero");
  }
  return pow(x, T(1) / T(2));
}

template <class T, int N>
Jet<T, N> sin(const Jet<T, N>& x) {
  using std::cos;
  using std::sin;
  const T s = sin(x.value()), c = cos(x.value());
  std::array<T, N + 1> d;
  const T cycle[4] = {s, c, -s, -c};
  for (int k = 0; k <= N; ++k) d[k] = cycle[k % 4];
  return x.compose(d);
}

template <class T, int N>
Jet<T, N> cos(const Jet<T, N>& x) {
  using std::cos;
  using std::sin;
  const T s = sin(x.value()), c = cos(x.value());
  std::array<T, N + 1> d;
  const T cycle[4] = {c, -s, -c, s};
  for (int k = 0; k <= N; ++k) d[k] = cycle[k % 4];
  return x.compose(d);
}

/// Values within this distance of +-1 are rejected by asin.
inline constexpr double kArcsinDomainGuard = 1e-14;

template <class T, int N>
Jet<T, N> asin(const Jet<T, N>& x) {
  using std::asin;
  using std::abs;
  using std::sqrt;
  const T v = x.value();
  if (!(abs(v) <= T(1) - T(kArcsinDomainGuard)))
    throw DomainError("arcsin argument outside (-1, 1)");
  const T s = T(1) - v * v;
  const T g = T(1) / sqrt(s);  // s^(-1/2)
  std::array<T, 5> all{asin(v), g, v * g * g * g, (T(1) + T(2) * v * v) * g * g * g * g * g,
                       (T(9) * v + T(6) * v * v * v) * g * g * g * g * g * g * g};
  std::array<T, N + 1> d;
  for (int k = 0; k <= N; ++k) d[k] = all[k];
  return x.compose(d);
}

template <class T, int N>
Jet<T, N> atan(const Jet<T, N>& x) {
  using std::atan;
  const T v = x.value();
  const T is = T(1) / (T(1) + v * v);
  std::array<T, 5> all{atan(v), is, -T(2) * v * is * is, (T(6) * v * v - T(2)) * is * is * is,
                       T(24) * v * (T(1) - v * v) * is * is * is * is};
  std::array<T, N + 1> d;
  for (int k = 0; k <= N; ++k) d[k] = all[k];
  return x.compose(d);
}

template <class T, int N>
Jet<T, N> asinh(const Jet<T, N>& x) {
  using std::asinh;
  using std::sqrt;
  const T v = x.value();
  const T g = T(1) / sqrt(T(1) + v * v);
  const T g3 = g * g * g;
  std::array<T, 5> all{asinh(v), g, -v * g3, (T(2) * v * v - T(1)) * g3 * g * g,
                       (T(9) * v - T(6) * v * v * v) * g3 * g3 * g};
  std::array<T, N + 1> d;
  for (int k = 0; k <= N; ++k) d[k] = all[k];
  return x.compose(d);
}

/// Seeds the four coordinate jets at `point` = (ct, x, y, z).
template <int N, class T>
std::array<Jet<T, N>, kSpacetimeDims> seed(const std::array<T, kSpacetimeDims>& point) {
  std::array<Jet<T, N>, kSpacetimeDims> out;
  for (int mu = 0; mu < kSpacetimeDims; ++mu) out[mu] = Jet<T, N>::variable(point[mu], mu);
  return out;
}

/// The jet types the engine threads through a point evaluation.
using StateJet = Jet<Real, 3>;
using PotentialJet = Jet<Real, 2>;
using FieldJet = Jet<Real, 1>;

}  // namespace rdi
