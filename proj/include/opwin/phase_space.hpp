#pragma once

#include "opwin/fourier.hpp"
#include "opwin/types.hpp"

namespace opwin {

// Periodized Gaussian g0(t) = c * sum_k exp(-pi (t + k n)^2 / n), unit l^2
// norm. Fixed vector of the unitary DFT (eigenvalue 1).
inline Signal gaussian_window(std::size_t n) {
  if (n == 0) throw domain_error("gaussian_window: group size must be positive");
  Signal g(n);
  const double nd = static_cast<double>(n);
  // exp(-pi (t + k n)^2 / n) < 1e-16 once |t + k n| > sqrt(16 n ln 10 / pi)
  const long long K = static_cast<long long>(std::ceil(std::sqrt(16.0 * nd * std::log(10.0) / kPi) / nd)) + 1;
  for (std::size_t t = 0; t < n; ++t) {
    double s = 0.0;
    for (long long k = -K; k <= K; ++k) {
      const double u = static_cast<double>(t) + static_cast<double>(k) * nd;
      s += std::exp(-kPi * u * u / nd);
    }
    g[t] = cplx{s, 0.0};
  }
  const double c = norm2(g);
  for (auto& v : g.values()) v /= c;
  return g;
}

// pi(z) f (t) = e^{2 pi i t xi / N} f(t - x), unitary.
inline Signal tf_shift(const Signal& f, PhasePoint z) {
  const std::size_t n = f.size();
  Signal out(n);
  const std::size_t x = z.x % n, xi = z.xi % n;
  for (std::size_t t = 0; t < n; ++t) {
    const double ang = 2.0 * kPi * static_cast<double>((t * xi) % n) / static_cast<double>(n);
    out[t] = std::polar(1.0, ang) * f.at_mod(static_cast<long long>(t) - static_cast<long long>(x));
  }
  return out;
}

// pi(z)^* = e^{-2 pi i x xi / N} pi(-z).
inline Signal tf_shift_adjoint(const Signal& f, PhasePoint z) {
  const std::size_t n = f.size();
  const std::size_t x = z.x % n, xi = z.xi % n;
  Signal out = tf_shift(f, PhasePoint{mod_n(-static_cast<long long>(x), n),
                                      mod_n(-static_cast<long long>(xi), n)});
  const double ang = -2.0 * kPi * static_cast<double>((x * xi) % n) / static_cast<double>(n);
  const cplx phase = std::polar(1.0, ang);
  for (auto& v : out.values()) v *= phase;
  return out;
}

}  // namespace opwin
