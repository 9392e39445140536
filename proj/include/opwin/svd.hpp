#pragma once

#include <algorithm>
#include <numeric>

#include "opwin/matrix.hpp"

namespace opwin {

struct SvdResult {
  std::vector<double> singular_values;  // descending
  OperatorWindow U;                     // A = U diag(s) V^H
  OperatorWindow V;
  int sweeps = 0;
};

// One-sided Jacobi SVD for complex square matrices. Columns of the working
// copy are rotated pairwise until mutually orthogonal; singular values are
// the final column norms.
inline SvdResult jacobi_svd(const OperatorWindow& A, double tol = 1e-14,
                            int max_sweeps = 60) {
  const std::size_t n = A.size();
  OperatorWindow W = A;
  OperatorWindow V = OperatorWindow::identity(n);

  auto col_inner = [&](const OperatorWindow& M, std::size_t i, std::size_t j) {
    cplx s{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) s += std::conj(M(k, i)) * M(k, j);
    return s;
  };

  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double alpha = std::real(col_inner(W, i, i));
        const double beta = std::real(col_inner(W, j, j));
        const cplx gamma = col_inner(W, i, j);
        const double g = std::abs(gamma);
        if (g <= tol * std::sqrt(alpha * beta) || g == 0.0) continue;
        rotated = true;
        const cplx phase = gamma / g;  // gamma = g * phase
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        // columns [i j] <- [i j] * [[c, s], [-s conj(ph), c conj(ph)]]
        for (std::size_t k = 0; k < n; ++k) {
          const cplx wi = W(k, i), wj = W(k, j);
          W(k, i) = c * wi - s * std::conj(phase) * wj;
          W(k, j) = s * phase * wi + c * wj;
          const cplx vi = V(k, i), vj = V(k, j);
          V(k, i) = c * vi - s * std::conj(phase) * vj;
          V(k, j) = s * phase * vi + c * vj;
        }
      }
    if (!rotated) break;
  }
  if (sweep == max_sweeps)
    throw numeric_error("jacobi_svd: no convergence after " + std::to_string(max_sweeps) +
                        " sweeps");

  SvdResult out;
  out.sweeps = sweep;
  out.singular_values.resize(n);
  out.U = OperatorWindow(n);
  out.V = OperatorWindow(n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += std::norm(W(k, j));
    norms[j] = std::sqrt(s);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return norms[a] > norms[b]; });
  for (std::size_t jj = 0; jj < n; ++jj) {
    const std::size_t j = order[jj];
    out.singular_values[jj] = norms[j];
    const double inv = norms[j] > 0.0 ? 1.0 / norms[j] : 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      out.U(k, jj) = W(k, j) * inv;
      out.V(k, jj) = V(k, j);
    }
  }
  return out;
}

// || A - U diag(s) V^H ||_F, the reconstruction residual of an SVD.
inline double svd_residual(const OperatorWindow& A, const SvdResult& svd) {
  const std::size_t n = A.size();
  OperatorWindow R = A;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k)
        s += svd.U(i, k) * svd.singular_values[k] * std::conj(svd.V(j, k));
      R(i, j) -= s;
    }
  return R.frobenius();
}

struct EigResult {
  std::vector<double> eigenvalues;  // ascending
  OperatorWindow vectors;           // columns; A = V diag(l) V^H
};

// Cyclic two-sided Jacobi for Hermitian matrices.
inline EigResult hermitian_eig(const OperatorWindow& A, double tol = 1e-14,
                               int max_sweeps = 60) {
  const std::size_t n = A.size();
  if (A.hermitian_defect() > 1e-8 * (1.0 + A.frobenius()))
    throw domain_error("hermitian_eig: input is not Hermitian");
  OperatorWindow H = A;
  // symmetrize roundoff
  for (std::size_t i = 0; i < n; ++i) {
    H(i, i) = cplx{std::real(H(i, i)), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx m = 0.5 * (H(i, j) + std::conj(H(j, i)));
      H(i, j) = m;
      H(j, i) = std::conj(m);
    }
  }
  OperatorWindow V = OperatorWindow::identity(n);
  const double scale = std::max(H.frobenius(), 1e-300);

  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off = std::max(off, std::abs(H(i, j)));
    if (off <= tol * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx h = H(p, q);
        const double g = std::abs(h);
        if (g <= tol * scale) continue;
        const cplx phase = h / g;
        const double app = std::real(H(p, p));
        const double aqq = std::real(H(q, q));
        const double zeta = (aqq - app) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const cplx rpp{c, 0.0}, rpq = s * phase, rqp = -s * std::conj(phase), rqq{c, 0.0};
        // H <- R^H H R on rows/columns p, q
        for (std::size_t k = 0; k < n; ++k) {
          const cplx hkp = H(k, p), hkq = H(k, q);
          H(k, p) = hkp * rpp + hkq * rqp;
          H(k, q) = hkp * rpq + hkq * rqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx hpk = H(p, k), hqk = H(q, k);
          H(p, k) = std::conj(rpp) * hpk + std::conj(rqp) * hqk;
          H(q, k) = std::conj(rpq) * hpk + std::conj(rqq) * hqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = V(k, p), vkq = V(k, q);
          V(k, p) = vkp * rpp + vkq * rqp;
          V(k, q) = vkp * rpq + vkq * rqq;
        }
      }
  }
  if (sweep == max_sweeps)
    throw numeric_error("hermitian_eig: no convergence after " +
                        std::to_string(max_sweeps) + " sweeps");

  EigResult out;
  out.eigenvalues.resize(n);
  out.vectors = OperatorWindow(n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::real(H(a, a)) < std::real(H(b, b));
  });
  for (std::size_t jj = 0; jj < n; ++jj) {
    const std::size_t j = order[jj];
    out.eigenvalues[jj] = std::real(H(j, j));
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, jj) = V(k, j);
  }
  return out;
}

}  // namespace opwin
