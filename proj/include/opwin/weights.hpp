#pragma once

#include <algorithm>
#include <limits>

#include "opwin/types.hpp"

namespace opwin {

inline constexpr double kInfExp = std::numeric_limits<double>::infinity();

enum class WeightKind { submultiplicative, moderate, unchecked };

// Positive weight on the phase space Z_N x Z_N.
class Weight {
 public:
  Weight() = default;
  Weight(std::size_t n, double fill, WeightKind kind = WeightKind::unchecked)
      : n_(n), values_(n * n, fill), kind_(kind) {
    if (n == 0) throw domain_error("Weight: group size must be positive");
    check_positive();
  }
  Weight(std::size_t n, std::vector<double> values, WeightKind kind)
      : n_(n), values_(std::move(values)), kind_(kind) {
    if (n == 0 || values_.size() != n * n) throw dimension_error("Weight: bad grid");
    check_positive();
  }

  std::size_t group_size() const { return n_; }
  WeightKind kind() const { return kind_; }
  double operator()(std::size_t x, std::size_t xi) const { return values_[x * n_ + xi]; }
  double at_mod(long long x, long long xi) const {
    return values_[mod_n(x, n_) * n_ + mod_n(xi, n_)];
  }
  const std::vector<double>& values() const { return values_; }

  Weight pow(double s) const {
    std::vector<double> v(values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::pow(values_[i], s);
    return Weight(n_, std::move(v), WeightKind::unchecked);
  }

  // Reflected weight m~(z) = m(-z).
  Weight reflect() const {
    std::vector<double> v(values_.size());
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t xi = 0; xi < n_; ++xi)
        v[x * n_ + xi] = at_mod(-static_cast<long long>(x), -static_cast<long long>(xi));
    return Weight(n_, std::move(v), kind_);
  }

 private:
  void check_positive() const {
    for (double w : values_)
      if (!(w > 0.0) || !std::isfinite(w))
        throw domain_error("Weight: values must be positive and finite");
  }

  std::size_t n_ = 0;
  std::vector<double> values_;
  WeightKind kind_ = WeightKind::unchecked;
};

// Torus distance d_N(t) = min(t, N - t).
inline double torus_dist(std::size_t t, std::size_t n) {
  return static_cast<double>(std::min(t % n, n - t % n));
}

// Exhaustive submultiplicativity check, O(N^4).
inline bool is_submultiplicative(const Weight& v) {
  const std::size_t n = v.group_size();
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t k1 = 0; k1 < n; ++k1)
      for (std::size_t x2 = 0; x2 < n; ++x2)
        for (std::size_t k2 = 0; k2 < n; ++k2) {
          const double lhs = v((x1 + x2) % n, (k1 + k2) % n);
          if (lhs > v(x1, k1) * v(x2, k2) * (1.0 + 1e-12)) return false;
        }
  return true;
}

// v(x, xi) = (1 + d_N(x) + d_N(xi))^s; submultiplicative via the triangle
// inequality for d_N, confirmed by the exhaustive check.
inline Weight weight_polynomial(std::size_t n, double s) {
  if (s < 0.0)
    throw domain_error("weight_polynomial: s must be >= 0 (use reciprocal_weight for 1/v)");
  std::vector<double> vals(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < n; ++xi)
      vals[x * n + xi] = std::pow(1.0 + torus_dist(x, n) + torus_dist(xi, n), s);
  Weight w(n, std::move(vals), WeightKind::submultiplicative);
  if (!is_submultiplicative(w))
    throw numeric_error("weight_polynomial: exhaustive submultiplicativity check failed");
  return w;
}

inline Weight reciprocal_weight(const Weight& v) {
  std::vector<double> vals(v.values().size());
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = 1.0 / v.values()[i];
  return Weight(v.group_size(), std::move(vals), WeightKind::moderate);
}

// Exact minimal constant with m(z1+z2) <= C v(z1) m(z2), by exhaustive max.
inline double moderateness_constant(const Weight& m, const Weight& v) {
  if (m.group_size() != v.group_size())
    throw dimension_error("moderateness_constant: size mismatch");
  if (v.kind() != WeightKind::submultiplicative)
    throw domain_error("moderateness_constant: v must be submultiplicative");
  const std::size_t n = m.group_size();
  double c = 0.0;
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t k1 = 0; k1 < n; ++k1)
      for (std::size_t x2 = 0; x2 < n; ++x2)
        for (std::size_t k2 = 0; k2 < n; ++k2)
          c = std::max(c, m((x1 + x2) % n, (k1 + k2) % n) / (v(x1, k1) * m(x2, k2)));
  return c;
}

struct MixedNormParams {
  double p = 2.0;
  double q = 2.0;
  Weight m;
};

namespace detail {

// Weighted l^p over one coordinate slice with per-coordinate measure weight
// N^{-1/2}; p = inf gives the sup.
inline double lp_reduce(const std::vector<double>& a, double p, double w) {
  if (p == kInfExp) {
    double s = 0.0;
    for (double x : a) s = std::max(s, x);
    return s;
  }
  double s = 0.0;
  for (double x : a) s += w * std::pow(x, p);
  return std::pow(s, 1.0 / p);
}

}  // namespace detail

// || F ||_{L^{p,q}_m}: inner in x, outer in xi, per-coordinate weight
// N^{-1/2} so that (2,2,1) coincides with L^2(mu). Exponents in [1, inf].
inline double mixed_norm(const PhaseField& F, const MixedNormParams& params) {
  if (params.p < 1.0 || params.q < 1.0) throw domain_error("mixed_norm: exponents must be >= 1");
  const std::size_t n = F.group_size();
  if (params.m.group_size() != n) throw dimension_error("mixed_norm: weight size mismatch");
  const double w = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<double> inner(n), outer(n);
  for (std::size_t xi = 0; xi < n; ++xi) {
    for (std::size_t x = 0; x < n; ++x)
      inner[x] = std::abs(F(x, xi)) * params.m(x, xi);
    outer[xi] = detail::lp_reduce(inner, params.p, w);
  }
  return detail::lp_reduce(outer, params.q, w);
}

inline double mixed_norm_vec(const VecPhaseField& Phi, const MixedNormParams& params) {
  return mixed_norm(pointwise_norms(Phi), params);
}

// (F * G)(z) = (1/N) sum_w F(w) G(z - w), convolution w.r.t. mu.
inline PhaseField convolve_phase(const PhaseField& F, const PhaseField& G) {
  const std::size_t n = F.group_size();
  if (G.group_size() != n) throw dimension_error("convolve_phase: size mismatch");
  PhaseField out(n);
  for (std::size_t zx = 0; zx < n; ++zx)
    for (std::size_t zk = 0; zk < n; ++zk) {
      cplx s{0.0, 0.0};
      for (std::size_t wx = 0; wx < n; ++wx)
        for (std::size_t wk = 0; wk < n; ++wk)
          s += F(wx, wk) * G.at_mod(static_cast<long long>(zx) - static_cast<long long>(wx),
                                    static_cast<long long>(zk) - static_cast<long long>(wk));
      out(zx, zk) = s / static_cast<double>(n);
    }
  return out;
}

// L^p(mu) norm restricted to one phase block.
namespace detail {
inline double block_lp_mu(const PhaseField& a, double p, std::size_t bx, std::size_t bk,
                          std::size_t block) {
  const std::size_t n = a.group_size();
  if (p == kInfExp) {
    double s = 0.0;
    for (std::size_t i = 0; i < block; ++i)
      for (std::size_t j = 0; j < block; ++j) s = std::max(s, std::abs(a(bx + i, bk + j)));
    return s;
  }
  double s = 0.0;
  for (std::size_t i = 0; i < block; ++i)
    for (std::size_t j = 0; j < block; ++j)
      s += std::pow(std::abs(a(bx + i, bk + j)), p) / static_cast<double>(n);
  return std::pow(s, 1.0 / p);
}
}  // namespace detail

// Discrete Wiener-amalgam quasi-norm over (N/block)^2 square phase blocks,
// weight evaluated at the block's lexicographically smallest corner. q may
// lie in (0,1); no triangle inequality is assumed downstream.
inline double amalgam_norm(const PhaseField& a, double p, double q, const Weight& v,
                           std::size_t block) {
  const std::size_t n = a.group_size();
  if (block == 0 || n % block != 0) throw domain_error("amalgam_norm: block must divide N");
  if (q <= 0.0) throw domain_error("amalgam_norm: q must be positive");
  if (p < 1.0) throw domain_error("amalgam_norm: p must be >= 1");
  if (v.group_size() != n) throw dimension_error("amalgam_norm: weight size mismatch");
  double s = 0.0;
  bool sup = (q == kInfExp);
  for (std::size_t bx = 0; bx < n; bx += block)
    for (std::size_t bk = 0; bk < n; bk += block) {
      const double local = detail::block_lp_mu(a, p, bx, bk, block) * v(bx, bk);
      if (sup)
        s = std::max(s, local);
      else
        s += std::pow(local, q);
    }
  return sup ? s : std::pow(s, 1.0 / q);
}

// || h ||_{L^{1/2}_w(mu)} quasi-norm: ((1/N) sum (h w)^{1/2})^2, h >= 0.
inline double l_half_mu(const PhaseField& h, const Weight& w) {
  const std::size_t n = h.group_size();
  if (w.group_size() != n) throw dimension_error("l_half_mu: size mismatch");
  double s = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < n; ++xi)
      s += std::sqrt(std::abs(h(x, xi)) * w(x, xi)) / static_cast<double>(n);
  return s * s;
}

}  // namespace opwin
