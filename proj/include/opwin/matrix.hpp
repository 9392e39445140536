#pragma once

#include "opwin/types.hpp"

namespace opwin {

// Complex N x N matrix acting on Signals: (S f)(t) = sum_s S(t,s) f(s).
class OperatorWindow {
 public:
  OperatorWindow() = default;
  explicit OperatorWindow(std::size_t n) : n_(n), entries_(n * n, cplx{0.0, 0.0}) {
    if (n == 0) throw domain_error("OperatorWindow: size must be positive");
  }
  OperatorWindow(std::size_t n, std::vector<cplx> entries)
      : n_(n), entries_(std::move(entries)) {
    if (n == 0 || entries_.size() != n * n)
      throw dimension_error("OperatorWindow: bad entry grid");
  }

  std::size_t size() const { return n_; }
  cplx& operator()(std::size_t t, std::size_t s) { return entries_[t * n_ + s]; }
  const cplx& operator()(std::size_t t, std::size_t s) const { return entries_[t * n_ + s]; }
  std::vector<cplx>& entries() { return entries_; }
  const std::vector<cplx>& entries() const { return entries_; }

  static OperatorWindow identity(std::size_t n) {
    OperatorWindow I(n);
    for (std::size_t t = 0; t < n; ++t) I(t, t) = cplx{1.0, 0.0};
    return I;
  }

  // (xi (x) phi) f = <f, phi> xi
  static OperatorWindow rank_one(const Signal& xi, const Signal& phi) {
    const std::size_t n = xi.size();
    if (phi.size() != n) throw dimension_error("rank_one: size mismatch");
    OperatorWindow S(n);
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t s = 0; s < n; ++s) S(t, s) = xi[t] * std::conj(phi[s]);
    return S;
  }

  OperatorWindow adjoint() const {
    OperatorWindow A(n_);
    for (std::size_t t = 0; t < n_; ++t)
      for (std::size_t s = 0; s < n_; ++s) A(t, s) = std::conj((*this)(s, t));
    return A;
  }

  Signal apply(const Signal& f) const {
    if (f.size() != n_) throw dimension_error("OperatorWindow::apply: size mismatch");
    Signal out(n_);
    for (std::size_t t = 0; t < n_; ++t) {
      cplx s{0.0, 0.0};
      for (std::size_t k = 0; k < n_; ++k) s += (*this)(t, k) * f[k];
      out[t] = s;
    }
    return out;
  }

  OperatorWindow operator*(const OperatorWindow& B) const {
    if (B.n_ != n_) throw dimension_error("OperatorWindow: size mismatch");
    OperatorWindow C(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        const cplx a = (*this)(i, k);
        if (a == cplx{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < n_; ++j) C(i, j) += a * B(k, j);
      }
    return C;
  }

  OperatorWindow operator+(const OperatorWindow& B) const {
    if (B.n_ != n_) throw dimension_error("OperatorWindow: size mismatch");
    OperatorWindow C(n_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      C.entries_[i] = entries_[i] + B.entries_[i];
    return C;
  }

  OperatorWindow operator-(const OperatorWindow& B) const {
    if (B.n_ != n_) throw dimension_error("OperatorWindow: size mismatch");
    OperatorWindow C(n_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      C.entries_[i] = entries_[i] - B.entries_[i];
    return C;
  }

  OperatorWindow scaled(cplx c) const {
    OperatorWindow C(n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) C.entries_[i] = c * entries_[i];
    return C;
  }

  double frobenius() const {
    double s = 0.0;
    for (const auto& e : entries_) s += std::norm(e);
    return std::sqrt(s);
  }

  double hermitian_defect() const {
    double s = 0.0;
    for (std::size_t t = 0; t < n_; ++t)
      for (std::size_t u = 0; u < n_; ++u)
        s = std::max(s, std::abs((*this)(t, u) - std::conj((*this)(u, t))));
    return s;
  }

 private:
  std::size_t n_ = 0;
  std::vector<cplx> entries_;
};

inline cplx trace(const OperatorWindow& T) {
  cplx s{0.0, 0.0};
  for (std::size_t t = 0; t < T.size(); ++t) s += T(t, t);
  return s;
}

// hs_inner(S, T) = tr(T^* S)
inline cplx hs_inner(const OperatorWindow& S, const OperatorWindow& T) {
  if (S.size() != T.size()) throw dimension_error("hs_inner: size mismatch");
  cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < S.entries().size(); ++i)
    s += S.entries()[i] * std::conj(T.entries()[i]);
  return s;
}

}  // namespace opwin
