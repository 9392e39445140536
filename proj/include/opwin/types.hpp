#pragma once

#include <complex>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace opwin {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

struct dimension_error : std::runtime_error {
  explicit dimension_error(const std::string& what) : std::runtime_error(what) {}
};

struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Point of the finite phase space Z_N x Z_N. Coordinates are reduced mod N.
struct PhasePoint {
  std::size_t x = 0;
  std::size_t xi = 0;
};

inline std::size_t mod_n(long long t, std::size_t n) {
  const long long nn = static_cast<long long>(n);
  long long r = t % nn;
  if (r < 0) r += nn;
  return static_cast<std::size_t>(r);
}

// Function on Z_N with counting measure in time.
class Signal {
 public:
  Signal() = default;
  explicit Signal(std::size_t n) : values_(n, cplx{0.0, 0.0}) {
    if (n == 0) throw domain_error("Signal: group size must be positive");
  }
  Signal(std::size_t n, std::vector<cplx> values) : values_(std::move(values)) {
    if (n == 0) throw domain_error("Signal: group size must be positive");
    if (values_.size() != n) throw dimension_error("Signal: length mismatch");
  }

  std::size_t size() const { return values_.size(); }
  cplx& operator[](std::size_t t) { return values_[t]; }
  const cplx& operator[](std::size_t t) const { return values_[t]; }
  // mod-N access for shifted indexing
  const cplx& at_mod(long long t) const { return values_[mod_n(t, size())]; }

  std::vector<cplx>& values() { return values_; }
  const std::vector<cplx>& values() const { return values_; }

  bool finite() const {
    for (const auto& v : values_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

 private:
  std::vector<cplx> values_;
};

inline cplx inner(const Signal& f, const Signal& g) {
  if (f.size() != g.size()) throw dimension_error("inner: size mismatch");
  cplx s{0.0, 0.0};
  for (std::size_t t = 0; t < f.size(); ++t) s += f[t] * std::conj(g[t]);
  return s;
}

inline double norm2(const Signal& f) {
  double s = 0.0;
  for (const auto& v : f.values()) s += std::norm(v);
  return std::sqrt(s);
}

// Complex function on the phase space Z_N x Z_N, carrying the measure mu that
// assigns mass 1/N to each of the N^2 points. Stored row-major in (x, xi).
class PhaseField {
 public:
  PhaseField() = default;
  explicit PhaseField(std::size_t n) : n_(n), values_(n * n, cplx{0.0, 0.0}) {
    if (n == 0) throw domain_error("PhaseField: group size must be positive");
  }

  std::size_t group_size() const { return n_; }
  cplx& operator()(std::size_t x, std::size_t xi) { return values_[x * n_ + xi]; }
  const cplx& operator()(std::size_t x, std::size_t xi) const { return values_[x * n_ + xi]; }
  const cplx& at_mod(long long x, long long xi) const {
    return values_[mod_n(x, n_) * n_ + mod_n(xi, n_)];
  }

  std::vector<cplx>& values() { return values_; }
  const std::vector<cplx>& values() const { return values_; }

 private:
  std::size_t n_ = 0;
  std::vector<cplx> values_;
};

// L^2(mu) norm of a phase field.
inline double l2_mu(const PhaseField& F) {
  double s = 0.0;
  for (const auto& v : F.values()) s += std::norm(v);
  return std::sqrt(s / static_cast<double>(F.group_size()));
}

// Inner product on L^2(mu).
inline cplx inner_mu(const PhaseField& F, const PhaseField& G) {
  if (F.group_size() != G.group_size()) throw dimension_error("inner_mu: size mismatch");
  cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < F.values().size(); ++i)
    s += F.values()[i] * std::conj(G.values()[i]);
  return s / static_cast<double>(F.group_size());
}

// Map from phase points to signals; the range of the operator-window transform.
class VecPhaseField {
 public:
  VecPhaseField() = default;
  explicit VecPhaseField(std::size_t n) : n_(n), values_(n * n, Signal(n)) {
    if (n == 0) throw domain_error("VecPhaseField: group size must be positive");
  }

  std::size_t group_size() const { return n_; }
  Signal& operator()(std::size_t x, std::size_t xi) { return values_[x * n_ + xi]; }
  const Signal& operator()(std::size_t x, std::size_t xi) const { return values_[x * n_ + xi]; }

 private:
  std::size_t n_ = 0;
  std::vector<Signal> values_;
};

// Pointwise L^2 reduction of a vector-valued field.
inline PhaseField pointwise_norms(const VecPhaseField& Phi) {
  const std::size_t n = Phi.group_size();
  PhaseField out(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < n; ++xi) {
      if (Phi(x, xi).size() != n)
        throw dimension_error("pointwise_norms: inner signal size mismatch");
      out(x, xi) = cplx{norm2(Phi(x, xi)), 0.0};
    }
  return out;
}

}  // namespace opwin
