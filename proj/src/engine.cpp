#include "rdi/engine.hpp"

#include "rdi/errors.hpp"

#include <cmath>
#include <sstream>

namespace rdi {

namespace {

using CR = Cx<Real>;
using M0 = Mat2<CR>;
using C2 = CJet<Real, 2>;
using M2 = Mat2<C2>;

template <int M, int N>
Mat2<CJet<Real, M>> truncate_matrix(const Mat2<CJet<Real, N>>& m) {
  return {truncate<M>(m.a11), truncate<M>(m.a12), truncate<M>(m.a21), truncate<M>(m.a22)};
}

template <int N>
Mat2<CJet<Real, N - 1>> derivative_matrix(const Mat2<CJet<Real, N>>& m, int mu) {
  return {derivative(m.a11, mu), derivative(m.a12, mu), derivative(m.a21, mu),
          derivative(m.a22, mu)};
}

template <int N>
M0 value_matrix(const Mat2<CJet<Real, N>>& m) {
  return {value_of(m.a11), value_of(m.a12), value_of(m.a21), value_of(m.a22)};
}

/// sigma_mu M sigma_3, written out to avoid general matrix products.
template <class S>
Mat2<S> sandwich(int mu, const Mat2<S>& m) {
  // M sigma_3 negates the second column.
  const Mat2<S> r{m.a11, -m.a12, m.a21, -m.a22};
  switch (mu) {
    case 0:
      return r;
    case 1:
      return {r.a21, r.a22, r.a11, r.a12};
    case 2:
      return {times_i(-r.a21), times_i(-r.a22), times_i(r.a11), times_i(r.a12)};
    default:
      return {r.a11, r.a12, -r.a21, -r.a22};
  }
}

/// K = sum_mu sigma_mu (d_mu s L + d_mu L) sigma_3, so that d-bar Psi sigma_3 = e^s K.
template <int N>
Mat2<CJet<Real, N - 1>> dirac_operator(const CJet<Real, N>& s, const Mat2<CJet<Real, N>>& core) {
  const auto low = truncate_matrix<N - 1>(core);
  Mat2<CJet<Real, N - 1>> k = Mat2<CJet<Real, N - 1>>::zero();
  for (int mu = 0; mu < 4; ++mu) {
    const auto ds = derivative(s, mu);
    auto term = derivative_matrix(core, mu);
    term += ds * low;
    k += sandwich(mu, term);
  }
  return k;
}

/// e^{-2 i Im s}, the phase left by (Psi-bar)^dagger Psi^-1 after the magnitude cancels.
template <int N>
CJet<Real, N> mass_phase(const CJet<Real, N>& s) {
  const Jet<Real, N> twice = s.im * Real(-2);
  return {cos(twice), sin(twice)};
}

/// hbar d_mu phi sigma_mu: the potential carried by the spin phase exp(-i phi sigma_3).
template <int N>
Mat2<CJet<Real, N>> phase_potential(const StateJet& phase, const PhysicalConstants& k) {
  std::array<CJet<Real, N>, 4> a;
  for (int mu = 0; mu < 4; ++mu)
    a[mu] = CJet<Real, N>(phase.derivative(mu).template truncate<N>() * k.hbar);
  return from_pauli(a);
}

double relative(const Real& num, const Real& den) { return to_double(num / den); }

Real frob(const M0& m) { return frobenius_norm(m); }

std::array<FieldJet, 3> curl(const std::array<PotentialJet, 4>& a_contra) {
  // Components 1..3 of a_contra; derivatives along x, y, z are axes 1..3.
  auto d = [&](int comp, int axis) { return a_contra[comp].derivative(axis); };
  return {d(3, 2) - d(2, 3), d(1, 3) - d(3, 1), d(2, 1) - d(1, 2)};
}

}  // namespace

InversionResult invert_potential(const SpinorField& psi, const PhysicalConstants& k) {
  const M0 core_value = value_matrix(psi.core);
  const Real core_norm = frob(core_value);
  using std::abs;
  const CR d = det(core_value);
  if (!(sqrt(d.re * d.re + d.im * d.im) > Real(kSingularThreshold) * core_norm * core_norm))
    throw SingularStateError("det(Psi) vanishes at the requested point");

  const M2 core = truncate_matrix<2>(psi.core);
  const M2 kmat = dirac_operator(psi.log_prefactor, psi.core);
  const C2 phase = mass_phase(truncate<2>(psi.log_prefactor));
  const C2 i_hbar(Jet<Real, 2>(Real(0)), Jet<Real, 2>(k.hbar));
  const C2 mc(Jet<Real, 2>(k.m * k.c));
  const M2 numerator = i_hbar * kmat - (mc * phase) * bar_dagger(core);
  InversionResult out;
  out.ea_bar = numerator * inverse(core) + phase_potential<2>(psi.phase, k);

  const M0 v = value_matrix(out.ea_bar);
  const Real floor = Real(kPotentialFloor) * k.m * k.c;
  const Real scale = std::max(frob(v), floor);
  out.hermiticity_residual = relative(frob(antihermitian_part(v)), scale);
  return out;
}

InversionResult invert_potential(const StateParametrization& state, const SpacetimePoint& p) {
  return invert_potential(evaluate_state(state, p), state.constants);
}

std::array<Real, 4> FourPotential::values() const {
  return {ea[0].value(), ea[1].value(), ea[2].value(), ea[3].value()};
}

std::array<Real, 4> FourPotential::contravariant() const {
  return {ea[0].value(), -ea[1].value(), -ea[2].value(), -ea[3].value()};
}

FourPotential hermiticity_gate(const InversionResult& inv, double tolerance) {
  if (!(inv.hermiticity_residual <= tolerance)) {
    std::ostringstream msg;
    msg << "potential is not Hermitian (residual " << inv.hermiticity_residual
        << "): the prescribed dynamics is not reachable";
    throw NonPhysicalDynamicsError(msg.str(), inv.hermiticity_residual);
  }
  const auto& m = inv.ea_bar;
  const Real half(0.5);
  FourPotential a;
  a.ea[0] = (m.a11.re + m.a22.re) * half;
  a.ea[1] = (m.a12.re + m.a21.re) * half;
  a.ea[2] = (m.a21.im - m.a12.im) * half;
  a.ea[3] = (m.a11.re - m.a22.re) * half;
  return a;
}

FieldJets field_jets(const FourPotential& a, const PhysicalConstants& k) {
  std::array<PotentialJet, 4> contra = a.ea;
  for (int i = 1; i < 4; ++i) contra[i] = -contra[i];
  FieldJets f;
  // E = -grad(phi) - dA/dt with phi = c A^0.
  for (int i = 0; i < 3; ++i)
    f.ee[i] = (a.ea[0].derivative(i + 1) + contra[i + 1].derivative(0)) * (-k.c);
  f.eb = curl(contra);
  return f;
}

FieldStrength field_strength(const FourPotential& a, const PhysicalConstants& k) {
  const FieldJets f = field_jets(a, k);
  FieldStrength out;
  for (int i = 0; i < 3; ++i) {
    out.e[i] = f.ee[i].value() / k.e;
    out.b[i] = f.eb[i].value() / k.e;
  }
  return out;
}

std::array<Real, 4> maxwell_current(const FourPotential& a, const PhysicalConstants& k) {
  const FieldJets f = field_jets(a, k);
  std::array<Real, 4> j;
  Real div_e = 0;
  for (int i = 0; i < 3; ++i) div_e += f.ee[i].d(i + 1);
  j[0] = k.epsilon0 * k.c * div_e / k.e;
  auto db = [&](int comp, int axis) { return f.eb[comp].d(axis); };
  const std::array<Real, 3> curl_b = {db(2, 2) - db(1, 3), db(0, 3) - db(2, 1),
                                      db(1, 1) - db(0, 2)};
  for (int i = 0; i < 3; ++i)
    j[i + 1] = (curl_b[i] / k.mu0() - k.epsilon0 * k.c * f.ee[i].d(0)) / k.e;
  return j;
}

HomogeneousMaxwell homogeneous_maxwell(const FourPotential& a, const PhysicalConstants& k) {
  const FieldJets f = field_jets(a, k);
  using std::abs;
  Real div = 0, div_scale = 0;
  for (int i = 0; i < 3; ++i) {
    div += f.eb[i].d(i + 1);
    div_scale += abs(f.eb[i].d(i + 1));
  }
  auto de = [&](int comp, int axis) { return f.ee[comp].d(axis); };
  const std::array<Real, 3> curl_e = {de(2, 2) - de(1, 3), de(0, 3) - de(2, 1),
                                      de(1, 1) - de(0, 2)};
  Real far = 0, far_scale = 0;
  for (int i = 0; i < 3; ++i) {
    // dB/dt = c dB/d(ct)
    const Real rate = k.c * f.eb[i].d(0);
    far = std::max(far, abs(curl_e[i] + rate));
    far_scale = std::max(far_scale, abs(rate));
    for (int j = 0; j < 3; ++j)
      for (int axis = 1; axis < 4; ++axis) far_scale = std::max(far_scale, abs(de(j, axis)));
  }
  const Real tiny = Real(1e-300);
  return {abs(div) / std::max(div_scale, tiny), far / std::max(far_scale, tiny)};
}

Real dirac_residual(const SpinorField& psi, const std::array<Real, 4>& ea,
                    const PhysicalConstants& k) {
  const CJet<Real, 1> s1 = truncate<1>(psi.log_prefactor);
  const auto core1 = truncate_matrix<1>(psi.core);
  const M0 kmat = value_matrix(dirac_operator(s1, core1));
  const M0 core = value_matrix(psi.core);
  const CR phase = value_of(mass_phase(truncate<0>(psi.log_prefactor)));
  // e A-bar = e A_mu sigma_mu (covariant coefficients).
  const M0 a_bar = paravector<Real>(ea) - value_matrix(phase_potential<0>(psi.phase, k));
  const M0 r = CR(Real(0), k.c * k.hbar) * kmat - CR(k.c) * (a_bar * core) -
               (CR(k.rest_energy()) * phase) * bar_dagger(core);
  return frob(r) / (k.rest_energy() * frob(core));
}

DiracCurrent dirac_current(const SpinorField& psi, const PhysicalConstants& k) {
  const M0 l = value_matrix(psi.core);
  const M0 llt = l * dagger(l);
  const Real weight = exp(Real(2) * psi.log_prefactor.re.value());
  const auto coeff = hermitian_coefficients<Real>(llt);
  DiracCurrent out;
  // Tr(M sigma_mu) = 2 * Pauli coefficient.
  for (int mu = 0; mu < 4; ++mu) out.j[mu] = Real(2) * weight * coeff[mu];
  if (!(coeff[0] > 0)) throw ZeroDensityError("Dirac density vanishes");
  Real speed2 = 0;
  for (int i = 0; i < 3; ++i) {
    out.v[i] = k.c * coeff[i + 1] / coeff[0];
    speed2 += out.v[i] * out.v[i];
  }
  out.superluminal = sqrt(speed2) >= k.c;
  return out;
}

ScalarInversion scalar_inversion(const StateParametrization& state, const SpacetimePoint& p,
                                 const Real& kappa) {
  const PhysicalConstants& k = state.constants;
  const SpinorField psi = evaluate_state(state, p);
  const CJet<Real, 1> s1 = truncate<1>(psi.log_prefactor);
  const auto core1 = truncate_matrix<1>(psi.core);
  const M0 kmat = value_matrix(dirac_operator(s1, core1));
  const M0 l = value_matrix(psi.core);
  const CR phase = value_of(mass_phase(truncate<0>(psi.log_prefactor)));
  const CR dl = det(l);
  if (!(sqrt(dl.re * dl.re + dl.im * dl.im) > Real(kSingularThreshold) * frob(l) * frob(l)))
    throw SingularStateError("det(Psi) vanishes at the requested point");
  const M0 l_inv = inverse(l);
  const M0 x = CR(Real(0), k.c * k.hbar) * kmat * l_inv +
               CR(k.c) * value_matrix(phase_potential<0>(psi.phase, k));
  const M0 y = phase * bar_dagger(l) * l_inv;
  const M0 w = x * inverse(y);
  const Real w0 = (w.a11.re + w.a22.re) / Real(2);
  const M0 rest = w - CR(w0) * M0::identity();

  const M0 llt = l * dagger(l);
  const Real log_norm = state.log_density_normalization.value_or(Real(0));
  const Real density =
      exp(log_norm + Real(2) * psi.log_prefactor.re.value()) * (llt.a11.re + llt.a22.re) / 2;
  ScalarInversion out;
  out.v = w0 - k.rest_energy() - kappa * density;
  out.residual = frob(rest) / k.rest_energy();
  return out;
}

ScenarioReport analyze(const StateParametrization& state, const SpacetimePoint& p,
                       double hermiticity_tolerance) {
  const PhysicalConstants& k = state.constants;
  const SpinorField psi = evaluate_state(state, p);
  const InversionResult inv = invert_potential(psi, k);
  const FourPotential a = hermiticity_gate(inv, hermiticity_tolerance);
  ScenarioReport r;
  r.point = p;
  r.ea = a.values();
  r.hermiticity_residual = inv.hermiticity_residual;
  r.fields = field_strength(a, k);
  r.maxwell_current = maxwell_current(a, k);
  r.dirac = dirac_current(psi, k);
  r.dirac_residual = dirac_residual(psi, r.ea, k);
  return r;
}

}  // namespace rdi
