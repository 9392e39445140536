#pragma once

#include <cstdint>

#include "opwin/matrix.hpp"

namespace opwin {

// xoshiro256** seeded through splitmix64. Bit-reproducible across platforms;
// per-instance substreams are derived by mixing (seed, stream, instance).
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  static constexpr const char* kName = "xoshiro256** 1.0";

  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  // Deterministic substream for instance `index` of stream `stream`.
  static Rng substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t sm = seed;
    sm ^= 0xA3C59AC2ULL + stream * 0x9E3779B97F4A7C15ULL;
    sm ^= splitmix64(sm) + index;
    return Rng(splitmix64(sm));
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // uniform on [-1, 1]
  double uniform_pm1() { return 2.0 * uniform01() - 1.0; }
  cplx complex_pm1() {
    const double re = uniform_pm1();
    return cplx{re, uniform_pm1()};
  }
  std::size_t index(std::size_t bound) { return static_cast<std::size_t>(next() % bound); }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

// ---- instance generators ----

inline Signal random_signal(Rng& rng, std::size_t n) {
  Signal f(n);
  for (auto& v : f.values()) v = rng.complex_pm1();
  return f;
}

inline Signal random_unit_signal(Rng& rng, std::size_t n) {
  Signal f = random_signal(rng, n);
  const double c = norm2(f);
  if (c > 0.0)
    for (auto& v : f.values()) v /= c;
  else
    f[0] = cplx{1.0, 0.0};
  return f;
}

inline PhaseField random_field(Rng& rng, std::size_t n) {
  PhaseField F(n);
  for (auto& v : F.values()) v = rng.complex_pm1();
  return F;
}

inline PhaseField random_nonneg_field(Rng& rng, std::size_t n) {
  PhaseField F(n);
  for (auto& v : F.values()) v = cplx{rng.uniform01(), 0.0};
  return F;
}

inline PhaseField sparse_nonneg_field(Rng& rng, std::size_t n) {
  PhaseField F(n);
  const std::size_t hits = 1 + rng.index(std::max<std::size_t>(n, 2));
  for (std::size_t k = 0; k < hits; ++k)
    F(rng.index(n), rng.index(n)) = cplx{rng.uniform01() + 0.1, 0.0};
  return F;
}

inline OperatorWindow random_matrix(Rng& rng, std::size_t n) {
  OperatorWindow S(n);
  for (auto& e : S.entries()) e = rng.complex_pm1();
  return S;
}

inline OperatorWindow random_rank_one(Rng& rng, std::size_t n) {
  return OperatorWindow::rank_one(random_signal(rng, n), random_signal(rng, n));
}

inline OperatorWindow random_hermitian_psd(Rng& rng, std::size_t n) {
  const OperatorWindow A = random_matrix(rng, n);
  return A.adjoint() * A;
}

inline OperatorWindow random_diagonal(Rng& rng, std::size_t n) {
  OperatorWindow D(n);
  for (std::size_t t = 0; t < n; ++t) D(t, t) = rng.complex_pm1();
  return D;
}

// Gram-Schmidt of a random matrix; restarts are unnecessary at desk scale.
inline OperatorWindow random_unitary(Rng& rng, std::size_t n) {
  OperatorWindow A = random_matrix(rng, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      cplx proj{0.0, 0.0};
      for (std::size_t t = 0; t < n; ++t) proj += std::conj(A(t, k)) * A(t, j);
      for (std::size_t t = 0; t < n; ++t) A(t, j) -= proj * A(t, k);
    }
    double norm = 0.0;
    for (std::size_t t = 0; t < n; ++t) norm += std::norm(A(t, j));
    norm = std::sqrt(norm);
    for (std::size_t t = 0; t < n; ++t) A(t, j) /= norm;
  }
  return A;
}

// Rotates through the generator kinds the harness must cover.
inline OperatorWindow generate_operator(Rng& rng, std::size_t n, std::size_t kind) {
  switch (kind % 5) {
    case 0: return random_matrix(rng, n);
    case 1: return random_rank_one(rng, n);
    case 2: return random_hermitian_psd(rng, n);
    case 3: return random_diagonal(rng, n);
    default: return random_unitary(rng, n);
  }
}

}  // namespace opwin
