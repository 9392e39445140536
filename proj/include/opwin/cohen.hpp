#pragma once

#include "opwin/operator_window.hpp"

namespace opwin {

// Cohen's class distribution Q_T f(z) = <T pi(z)^* f, pi(z)^* f>.
inline PhaseField cohen(const OperatorWindow& T, const Signal& f) {
  const std::size_t n = T.size();
  if (f.size() != n) throw dimension_error("cohen: size mismatch");
  PhaseField Q(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < n; ++xi) {
      const Signal u = tf_shift_adjoint(f, PhasePoint{x, xi});
      Q(x, xi) = inner(T.apply(u), u);
    }
  return Q;
}

// Localization operator A_a^{phi1, phi2} f = V_{phi2}^* (a V_{phi1} f),
// assembled column-by-column.
inline OperatorWindow localization(const PhaseField& a, const Signal& phi1,
                                   const Signal& phi2) {
  const std::size_t n = a.group_size();
  if (phi1.size() != n || phi2.size() != n)
    throw dimension_error("localization: size mismatch");
  OperatorWindow A(n);
  for (std::size_t s = 0; s < n; ++s) {
    Signal delta(n);
    delta[s] = cplx{1.0, 0.0};
    PhaseField V = stft(delta, phi1);
    for (std::size_t i = 0; i < V.values().size(); ++i) V.values()[i] *= a.values()[i];
    const Signal col = stft_adjoint(V, phi2);
    for (std::size_t t = 0; t < n; ++t) A(t, s) = col[t];
  }
  return A;
}

// 2D STFT on the double phase space with window Psi (a phase field):
// V_Psi a(z, zeta) = (1/N) sum_w a(w) e^{-2 pi i w.zeta / N} conj(Psi(w - z)).
// Modulation norm of the symbol: inner exponent over z, outer over zeta,
// per-phase-coordinate measure weight 1/N (mu x mu).
inline double symbol_mod_norm(const PhaseField& a, double p, double q,
                              std::size_t size_cap = 24) {
  if (p < 1.0 || q < 1.0) throw domain_error("symbol_mod_norm: exponents must be >= 1");
  const std::size_t n = a.group_size();
  if (n > size_cap)
    throw resource_error("symbol_mod_norm: N = " + std::to_string(n) +
                         " exceeds the O(N^4) cap " + std::to_string(size_cap));
  const Signal g0 = gaussian_window(n);
  const PhaseField Psi = stft(g0, g0);
  const double w_in = 1.0 / static_cast<double>(n);

  std::vector<double> outer;
  outer.reserve(n * n);
  std::vector<double> inner;
  inner.reserve(n * n);
  for (std::size_t zc1 = 0; zc1 < n; ++zc1)
    for (std::size_t zc2 = 0; zc2 < n; ++zc2) {
      inner.clear();
      for (std::size_t z1 = 0; z1 < n; ++z1)
        for (std::size_t z2 = 0; z2 < n; ++z2) {
          cplx s{0.0, 0.0};
          for (std::size_t w1 = 0; w1 < n; ++w1)
            for (std::size_t w2 = 0; w2 < n; ++w2) {
              const std::size_t dot = (w1 * zc1 + w2 * zc2) % n;
              const double ang = -2.0 * kPi * static_cast<double>(dot) / static_cast<double>(n);
              s += a(w1, w2) * std::polar(1.0, ang) *
                   std::conj(Psi.at_mod(static_cast<long long>(w1) - static_cast<long long>(z1),
                                        static_cast<long long>(w2) - static_cast<long long>(z2)));
            }
          inner.push_back(std::abs(s) * w_in);
        }
      outer.push_back(detail::lp_reduce(inner, p, w_in));
    }
  return detail::lp_reduce(outer, q, w_in);
}

// Direct formula for || sqrt(A_a^{phi,phi}) ||_{B_1^v}: with Psi = |V_phi g0|^2
// the field h(z) = ||a T_z Psi||_{L^1(mu)} satisfies
// b_norm(sqrt(A), 1, 1, v) = sqrt(|| h ||_{L^{1/2}_{v^2}(mu)}).
inline double b1v_localization_value(const PhaseField& a, const Signal& phi,
                                     const Weight& v) {
  const std::size_t n = a.group_size();
  if (phi.size() != n || v.group_size() != n)
    throw dimension_error("b1v_localization_value: size mismatch");
  if (norm2(phi) == 0.0) throw domain_error("b1v_localization_value: phi must be nonzero");
  for (const auto& val : a.values())
    if (val.real() < -1e-12 || std::abs(val.imag()) > 1e-12)
      throw domain_error("b1v_localization_value: symbol must be nonnegative");

  const Signal g0 = gaussian_window(n);
  const PhaseField V = stft(g0, phi);
  PhaseField Psi(n);
  for (std::size_t i = 0; i < Psi.values().size(); ++i)
    Psi.values()[i] = cplx{std::norm(V.values()[i]), 0.0};

  PhaseField h(n);
  for (std::size_t z1 = 0; z1 < n; ++z1)
    for (std::size_t z2 = 0; z2 < n; ++z2) {
      double s = 0.0;
      for (std::size_t w1 = 0; w1 < n; ++w1)
        for (std::size_t w2 = 0; w2 < n; ++w2)
          s += std::abs(a(w1, w2)) *
               std::real(Psi.at_mod(static_cast<long long>(w1) - static_cast<long long>(z1),
                                    static_cast<long long>(w2) - static_cast<long long>(z2)));
      h(z1, z2) = cplx{s / static_cast<double>(n), 0.0};
    }
  return std::sqrt(l_half_mu(h, v.pow(2.0)));
}

}  // namespace opwin
