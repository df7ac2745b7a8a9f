#pragma once

// Smooth functions of one variable (a trajectory Y(t), a profile f(z)) whose
// derivatives up to fourth order are available at any point.

#include "rdi/jet.hpp"

#include <array>
#include <functional>
#include <string>

namespace rdi {

class Profile {
 public:
  static constexpr int kMaxDerivative = 4;
  using Jet4 = Jet<Real, kMaxDerivative>;
  using Function = std::function<Jet4(const Jet4&)>;

  Profile() = default;
  Profile(std::string description, Function f)
      : description_(std::move(description)), f_(std::move(f)) {}

  explicit operator bool() const { return static_cast<bool>(f_); }
  const std::string& description() const { return description_; }

  /// Value and derivatives 0..4 at s.
  std::array<Real, kMaxDerivative + 1> derivatives(const Real& s) const {
    const Jet4 out = f_(Jet4::variable(s, 0));
    std::array<Real, kMaxDerivative + 1> d;
    for (int k = 0; k <= kMaxDerivative; ++k) d[k] = out.partial({k, 0, 0, 0});
    return d;
  }

  Real derivative(int k, const Real& s) const { return derivatives(s)[k]; }

  /// The k-th derivative of the profile composed with a jet argument.
  template <int N>
  Jet<Real, N> apply(const Jet<Real, N>& s, int k = 0) const {
    static_assert(N <= kMaxDerivative);
    if (k + N > kMaxDerivative) throw DomainError("profile derivative order exceeds 4");
    const auto all = derivatives(s.value());
    std::array<Real, N + 1> d;
    for (int j = 0; j <= N; ++j) d[j] = all[k + j];
    return s.compose(d);
  }

 private:
  std::string description_;
  Function f_;
};

/// max |Y'| over [t0, t1], sampled at `samples` + 1 evenly spaced points.
Real peak_speed(const Profile& y, const Real& t0, const Real& t1, int samples = 4096);

/// Y(t) = (L/2) [1 + sin(pi (t - T/2) / T)], rising from 0 to L over [0, T].
Profile sinusoidal_trajectory(const Real& length, const Real& duration);
/// Y(t) = (c / a) (sqrt(1 + (a t)^2) - 1): uniform proper acceleration from rest at t = 0,
/// with proper velocity a t.
Profile hyperbolic_trajectory(const Real& rate, const Real& c);
/// Y(t) = y0.
Profile constant_trajectory(const Real& y0);
/// f(z) = sqrt(xi^2 + z^2); its derivative is the sine of the Yvon-Takabayashi angle.
Profile soft_core_profile(const Real& xi);

}  // namespace rdi
