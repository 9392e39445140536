#pragma once

#include "opwin/stft.hpp"
#include "opwin/svd.hpp"

namespace opwin {

// l^p norm of the singular values; p = inf is the operator norm.
inline double schatten_norm(const OperatorWindow& T, double p) {
  if (p < 1.0) throw domain_error("schatten_norm: p must be >= 1");
  const SvdResult svd = jacobi_svd(T);
  if (p == kInfExp) return svd.singular_values.empty() ? 0.0 : svd.singular_values.front();
  double s = 0.0;
  for (double sv : svd.singular_values) s += std::pow(sv, p);
  return std::pow(s, 1.0 / p);
}

// Hermitian psd square root; eigenvalues in [-1e-10 * scale, 0) are clamped.
inline OperatorWindow psd_sqrt(const OperatorWindow& T) {
  const std::size_t n = T.size();
  const EigResult eig = hermitian_eig(T);
  const double scale = 1.0 + (eig.eigenvalues.empty() ? 0.0 : std::abs(eig.eigenvalues.back()));
  OperatorWindow R(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) {
        double lam = eig.eigenvalues[k];
        if (lam < 0.0) {
          if (lam < -1e-10 * scale)
            throw domain_error("psd_sqrt: input has a significantly negative eigenvalue");
          lam = 0.0;
        }
        s += eig.vectors(i, k) * std::sqrt(lam) * std::conj(eig.vectors(j, k));
      }
      R(i, j) = s;
    }
  return R;
}

// Operator-window transform: z -> S pi(z)^* f.
inline VecPhaseField op_stft(const OperatorWindow& S, const Signal& f) {
  const std::size_t n = S.size();
  if (f.size() != n) throw dimension_error("op_stft: size mismatch");
  VecPhaseField out(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < n; ++xi)
      out(x, xi) = S.apply(tf_shift_adjoint(f, PhasePoint{x, xi}));
  return out;
}

// Adjoint w.r.t. mu: h = (1/N) sum_z pi(z) S^* F(z).
inline Signal op_stft_adjoint(const OperatorWindow& S, const VecPhaseField& F) {
  const std::size_t n = S.size();
  if (F.group_size() != n) throw dimension_error("op_stft_adjoint: size mismatch");
  const OperatorWindow Sadj = S.adjoint();
  Signal h(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < n; ++xi) {
      const Signal term = tf_shift(Sadj.apply(F(x, xi)), PhasePoint{x, xi});
      for (std::size_t t = 0; t < n; ++t) h[t] += term[t] / static_cast<double>(n);
    }
  return h;
}

// Field z -> || S pi(z)^* window ||_2, the raw material of the B norms.
inline PhaseField op_window_field(const OperatorWindow& S, const Signal& window) {
  const std::size_t n = S.size();
  if (window.size() != n) throw dimension_error("op_window_field: size mismatch");
  PhaseField c(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < n; ++xi)
      c(x, xi) = cplx{norm2(S.apply(tf_shift_adjoint(window, PhasePoint{x, xi}))), 0.0};
  return c;
}

// || S ||_{B_{p,q}^m} with an arbitrary nonzero window (default g0).
inline double b_norm(const OperatorWindow& S, double p, double q, const Weight& m,
                     const Signal& window) {
  if (norm2(window) == 0.0) throw domain_error("b_norm: window must be nonzero");
  return mixed_norm(op_window_field(S, window), MixedNormParams{p, q, m});
}

inline double b_norm(const OperatorWindow& S, double p, double q, const Weight& m) {
  return b_norm(S, p, q, m, gaussian_window(S.size()));
}

// || f ||_{M^1_v} = || V_{g0} f ||_{L^1_v(mu)}
inline double m1v_norm(const Signal& f, const Weight& v) {
  const PhaseField V = stft(f, gaussian_window(f.size()));
  const std::size_t n = f.size();
  double s = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < n; ++xi)
      s += std::abs(V(x, xi)) * v(x, xi) / static_cast<double>(n);
  return s;
}

// Decomposition upper bound on the nuclear norm of S^*: sum_j sigma_j
// ||v_j||_{M^1_v} over the SVD expansion. Dominates b_norm(S, 1, 1, v).
inline double nuclear_bound(const OperatorWindow& S, const Weight& v) {
  if (v.kind() != WeightKind::submultiplicative)
    throw domain_error("nuclear_bound: v must be submultiplicative");
  const SvdResult svd = jacobi_svd(S);
  const std::size_t n = S.size();
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (svd.singular_values[j] == 0.0) continue;
    Signal vj(n);
    for (std::size_t k = 0; k < n; ++k) vj[k] = svd.V(k, j);
    total += svd.singular_values[j] * m1v_norm(vj, v);
  }
  return total;
}

}  // namespace opwin
