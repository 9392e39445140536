#pragma once

#include "opwin/types.hpp"

namespace opwin {
namespace detail {

// In-place Cooley-Tukey over the smallest prime factor; odd prime base case
// is the naive sum. sign = -1 forward, +1 inverse. Unnormalized.
inline void ct_transform(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  std::size_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (p * p > n) p = n;  // n prime

  if (p == n) {
    std::vector<cplx> out(n, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t t = 0; t < n; ++t) {
        const double ang = sign * 2.0 * kPi * static_cast<double>(t * k % n) / static_cast<double>(n);
        out[k] += a[t] * std::polar(1.0, ang);
      }
    a = std::move(out);
    return;
  }

  const std::size_t m = n / p;
  std::vector<std::vector<cplx>> sub(p, std::vector<cplx>(m));
  for (std::size_t t = 0; t < n; ++t) sub[t % p][t / p] = a[t];
  for (auto& s : sub) ct_transform(s, sign);

  for (std::size_t k = 0; k < n; ++k) {
    cplx acc{0.0, 0.0};
    for (std::size_t r = 0; r < p; ++r) {
      const double ang = sign * 2.0 * kPi * static_cast<double>((r * k) % n) / static_cast<double>(n);
      acc += sub[r][k % m] * std::polar(1.0, ang);
    }
    a[k] = acc;
  }
}

}  // namespace detail

// Unnormalized DFT sum: out[k] = sum_t a[t] e^{sign 2 pi i t k / n}.
inline std::vector<cplx> fft_sum(std::vector<cplx> a, int sign) {
  detail::ct_transform(a, sign);
  return a;
}

// Unitary DFT, kernel e^{-2 pi i t xi / N} / sqrt(N).
inline Signal dft(const Signal& f) {
  const std::size_t n = f.size();
  auto a = fft_sum(f.values(), -1);
  const double c = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& v : a) v *= c;
  return Signal(n, std::move(a));
}

inline Signal idft(const Signal& f) {
  const std::size_t n = f.size();
  auto a = fft_sum(f.values(), +1);
  const double c = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& v : a) v *= c;
  return Signal(n, std::move(a));
}

}  // namespace opwin
