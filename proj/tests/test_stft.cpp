#include <catch2/catch_amalgamated.hpp>

#include "opwin/rng.hpp"
#include "opwin/stft.hpp"

using namespace opwin;

namespace {
Signal delta(std::size_t n, std::size_t at) {
  Signal d(n);
  d[at] = cplx{1.0, 0.0};
  return d;
}
}  // namespace

TEST_CASE("stft point examples") {
  const std::size_t n = 2;
  const Signal d = delta(n, 0);
  const PhaseField V = stft(d, d);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < n; ++xi) {
      const double expect = (x == 0) ? 1.0 : 0.0;
      CHECK(std::abs(V(x, xi) - cplx{expect, 0.0}) < 1e-14);
    }
}

TEST_CASE("stft peak at the shift of the window") {
  const std::size_t n = 8;
  Rng rng(21);
  const Signal g = random_unit_signal(rng, n);
  const PhasePoint z0{3, 5};
  const Signal f = tf_shift(g, z0);
  const PhaseField V = stft(f, g);
  CHECK(std::abs(std::abs(V(z0.x, z0.xi)) - 1.0) < 1e-13);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < n; ++xi)
      CHECK(std::abs(V(x, xi)) <= 1.0 + 1e-13);  // Cauchy-Schwarz
}

TEST_CASE("fast path equals direct path") {
  Rng rng(22);
  for (std::size_t n : {3u, 4u, 6u, 7u, 12u}) {
    const Signal f = random_signal(rng, n), g = random_signal(rng, n);
    const PhaseField a = stft(f, g), b = stft_direct(f, g);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i)
      worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
    CHECK(worst < 1e-12 * (norm2(f) * norm2(g) + 1.0));
  }
}

TEST_CASE("Moyal identity and energy") {
  Rng rng(23);
  const std::size_t n = 8;
  const Signal f = random_signal(rng, n), g = random_signal(rng, n);
  const PhaseField V = stft(f, g);
  CHECK(std::abs(l2_mu(V) - norm2(f) * norm2(g)) < 1e-12 * (norm2(f) * norm2(g)));

  const Signal f2 = random_signal(rng, n), g2 = random_signal(rng, n);
  const cplx lhs = inner_mu(V, stft(f2, g2));
  const cplx rhs = inner(f, f2) * std::conj(inner(g, g2));
  CHECK(std::abs(lhs - rhs) < 1e-11 * (norm2(f) * norm2(g) * norm2(f2) * norm2(g2)));
}

TEST_CASE("adjoint pairing and atoms") {
  const std::size_t n = 6;
  Rng rng(24);
  const Signal g = random_signal(rng, n), f = random_signal(rng, n);
  const PhaseField F = random_field(rng, n);
  // <V_g^* F, f> = <F, V_g f>_mu
  const cplx lhs = inner(stft_adjoint(F, g), f);
  const cplx rhs = inner_mu(F, stft(f, g));
  CHECK(std::abs(lhs - rhs) < 1e-12 * (l2_mu(F) * norm2(f) * norm2(g) + 1.0));

  PhaseField atom(n);
  atom(0, 0) = cplx{static_cast<double>(n), 0.0};
  const Signal back = stft_adjoint(atom, g);
  double worst = 0.0;
  for (std::size_t t = 0; t < n; ++t) worst = std::max(worst, std::abs(back[t] - g[t]));
  CHECK(worst < 1e-13);

  const Signal zero = stft_adjoint(PhaseField(n), g);
  CHECK(norm2(zero) == 0.0);
}

TEST_CASE("inversion formula") {
  const std::size_t n = 9;
  Rng rng(25);
  const Signal g = random_unit_signal(rng, n), gamma = random_signal(rng, n);
  const Signal f = random_signal(rng, n);
  const cplx pairing = inner(gamma, g);
  REQUIRE(std::abs(pairing) > 1e-6);
  const Signal rec = stft_adjoint(stft(f, g), gamma);
  double worst = 0.0;
  for (std::size_t t = 0; t < n; ++t)
    worst = std::max(worst, std::abs(rec[t] / pairing - f[t]));
  CHECK(worst < 1e-11 * (norm2(f) + 1.0));
}

TEST_CASE("product-identity both sides agree") {
  // Gaussian quadruple at N=4, checked against a brute-force 2D transform
  const std::size_t n = 4;
  const Signal g0 = gaussian_window(n);
  const FieldPair pg = ft_product(g0, g0, g0, g0);
  double worst = 0.0;
  for (std::size_t i = 0; i < pg.lhs.values().size(); ++i)
    worst = std::max(worst, std::abs(pg.lhs.values()[i] - pg.rhs.values()[i]));
  CHECK(worst < 1e-10);

  // brute-force oracle for the transform side
  const PhaseField V = stft(g0, g0);
  PhaseField prod(n);
  for (std::size_t i = 0; i < prod.values().size(); ++i)
    prod.values()[i] = V.values()[i] * std::conj(V.values()[i]);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      cplx s{0.0, 0.0};
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          s += prod(x, y) *
               std::polar(1.0, -2.0 * kPi * static_cast<double>((x * u + y * v) % n) /
                                   static_cast<double>(n));
      CHECK(std::abs(pg.lhs(u, v) - s / static_cast<double>(n)) < 1e-12);
    }

  // zero inputs
  const Signal z(n);
  const FieldPair pz = ft_product(z, z, z, z);
  CHECK(l2_mu(pz.lhs) == 0.0);
  CHECK(l2_mu(pz.rhs) == 0.0);

  // random quadruple at N=6
  Rng rng(26);
  const Signal f1 = random_signal(rng, 6), g1 = random_signal(rng, 6);
  const Signal f2 = random_signal(rng, 6), g2 = random_signal(rng, 6);
  const FieldPair pr = ft_product(f1, g1, f2, g2);
  double worst6 = 0.0;
  for (std::size_t i = 0; i < pr.lhs.values().size(); ++i)
    worst6 = std::max(worst6, std::abs(pr.lhs.values()[i] - pr.rhs.values()[i]));
  CHECK(worst6 < 1e-10 * (norm2(f1) * norm2(g1) * norm2(f2) * norm2(g2) + 1.0));
}

TEST_CASE("convolution dominance") {
  const std::size_t n = 8;
  const Signal g0 = gaussian_window(n);
  const FieldPair origin = dominance_pair(g0, g0, g0);
  CHECK(std::abs(origin.lhs(0, 0) - cplx{1.0, 0.0}) < 1e-13);
  CHECK(origin.rhs(0, 0).real() >= origin.lhs(0, 0).real() - 1e-12);

  const Signal zero(n);
  const FieldPair pz = dominance_pair(g0, g0, zero);
  CHECK(l2_mu(pz.lhs) == 0.0);
  CHECK(l2_mu(pz.rhs) == 0.0);

  Rng rng(27);
  const Signal phi = random_signal(rng, n), psi = random_unit_signal(rng, n);
  const Signal f = random_signal(rng, n);
  const FieldPair p = dominance_pair(phi, psi, f);
  for (std::size_t i = 0; i < p.lhs.values().size(); ++i)
    CHECK(p.lhs.values()[i].real() <= p.rhs.values()[i].real() + 1e-12);

  CHECK_THROWS_AS(dominance_pair(phi, zero, f), domain_error);
}
