#pragma once

#include "opwin/fourier.hpp"
#include "opwin/phase_space.hpp"
#include "opwin/weights.hpp"

namespace opwin {

// V_g f(x, xi) = <f, pi(z) g>, O(N^3) reference path.
inline PhaseField stft_direct(const Signal& f, const Signal& g) {
  const std::size_t n = f.size();
  if (g.size() != n) throw dimension_error("stft: size mismatch");
  PhaseField V(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < n; ++xi)
      V(x, xi) = inner(f, tf_shift(g, PhasePoint{x, xi}));
  return V;
}

// Fast path: V(x, .) is the unnormalized DFT over t of f(t) conj(g(t - x)).
inline PhaseField stft(const Signal& f, const Signal& g) {
  const std::size_t n = f.size();
  if (g.size() != n) throw dimension_error("stft: size mismatch");
  PhaseField V(n);
  std::vector<cplx> h(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t t = 0; t < n; ++t)
      h[t] = f[t] * std::conj(g.at_mod(static_cast<long long>(t) - static_cast<long long>(x)));
    auto row = fft_sum(h, -1);
    for (std::size_t xi = 0; xi < n; ++xi) V(x, xi) = row[xi];
  }
  return V;
}

// V_g^* F = (1/N) sum_z F(z) pi(z) g, the adjoint w.r.t. <.,.>_mu.
inline Signal stft_adjoint(const PhaseField& F, const Signal& g) {
  const std::size_t n = g.size();
  if (F.group_size() != n) throw dimension_error("stft_adjoint: size mismatch");
  Signal h(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < n; ++xi) {
      const Signal shifted = tf_shift(g, PhasePoint{x, xi});
      const cplx c = F(x, xi) / static_cast<double>(n);
      for (std::size_t t = 0; t < n; ++t) h[t] += c * shifted[t];
    }
  return h;
}

// 2D DFT w.r.t. mu: (1/N) sum_{x,y} F(x,y) e^{-2 pi i (x u + y v)/N}.
inline PhaseField phase_dft(const PhaseField& F) {
  const std::size_t n = F.group_size();
  PhaseField out(n);
  // transform rows (y -> v), then columns (x -> u)
  std::vector<cplx> buf(n);
  PhaseField tmp(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) buf[y] = F(x, y);
    auto row = fft_sum(buf, -1);
    for (std::size_t v = 0; v < n; ++v) tmp(x, v) = row[v];
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t x = 0; x < n; ++x) buf[x] = tmp(x, v);
    auto col = fft_sum(buf, -1);
    for (std::size_t u = 0; u < n; ++u) out(u, v) = col[u] / static_cast<double>(n);
  }
  return out;
}

struct FieldPair {
  PhaseField lhs;
  PhaseField rhs;
};

// Both sides of the product identity: the 2D mu-DFT of V_{g1}f1 conj(V_{g2}f2)
// equals (V_{f2}f1 conj(V_{g2}g1)) read at (-y, x). The correction factor is
// identically 1 under this library's conventions.
inline FieldPair ft_product(const Signal& f1, const Signal& g1, const Signal& f2,
                            const Signal& g2) {
  const std::size_t n = f1.size();
  if (g1.size() != n || f2.size() != n || g2.size() != n)
    throw dimension_error("ft_product: size mismatch");
  const PhaseField A1 = stft(f1, g1), A2 = stft(f2, g2);
  PhaseField prod(n);
  for (std::size_t i = 0; i < prod.values().size(); ++i)
    prod.values()[i] = A1.values()[i] * std::conj(A2.values()[i]);
  FieldPair out{phase_dft(prod), PhaseField(n)};

  const PhaseField B1 = stft(f1, f2), B2 = stft(g1, g2);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const long long mx = -static_cast<long long>(y);
      out.rhs(x, y) = B1.at_mod(mx, static_cast<long long>(x)) *
                      std::conj(B2.at_mod(mx, static_cast<long long>(x)));
    }
  return out;
}

// Lemma: |V_phi f| <= ||psi||^{-2} |V_phi psi| * |V_psi f| pointwise, with
// constant exactly 1 in the finite model.
inline FieldPair dominance_pair(const Signal& phi, const Signal& psi, const Signal& f) {
  const double psi_norm = norm2(psi);
  if (psi_norm == 0.0) throw domain_error("dominance_pair: psi must be nonzero");
  const std::size_t n = phi.size();
  PhaseField lhs(n), a(n), b(n);
  const PhaseField Vf = stft(f, phi), Vpsi = stft(psi, phi), Vfpsi = stft(f, psi);
  for (std::size_t i = 0; i < lhs.values().size(); ++i) {
    lhs.values()[i] = std::abs(Vf.values()[i]);
    a.values()[i] = std::abs(Vpsi.values()[i]);
    b.values()[i] = std::abs(Vfpsi.values()[i]);
  }
  PhaseField rhs = convolve_phase(a, b);
  const double c = 1.0 / (psi_norm * psi_norm);
  for (auto& v : rhs.values()) v *= c;
  return FieldPair{std::move(lhs), std::move(rhs)};
}

}  // namespace opwin
