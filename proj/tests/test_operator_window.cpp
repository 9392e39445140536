#include <catch2/catch_amalgamated.hpp>

#include "opwin/rng.hpp"
#include "opwin/verify.hpp"

using namespace opwin;

TEST_CASE("operator-window transform basics") {
  const std::size_t n = 6;
  Rng rng(41);
  const Signal f = random_signal(rng, n);

  // S = I: || V_I f(z) || = || f || everywhere
  const VecPhaseField VI = op_stft(OperatorWindow::identity(n), f);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < n; ++xi)
      CHECK(std::abs(norm2(VI(x, xi)) - norm2(f)) < 1e-13 * (norm2(f) + 1.0));

  // rank-one reduction: || V_{xi (x) phi} f(z) || = ||xi|| |V_phi f(z)|
  const Signal xi = random_signal(rng, n), phi = random_signal(rng, n);
  const VecPhaseField VR = op_stft(OperatorWindow::rank_one(xi, phi), f);
  const PhaseField Vphi = stft(f, phi);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t k = 0; k < n; ++k)
      CHECK(std::abs(norm2(VR(x, k)) - norm2(xi) * std::abs(Vphi(x, k))) <
            1e-12 * (norm2(xi) * norm2(phi) * norm2(f) + 1.0));

  // naive per-point oracle at N=4
  const std::size_t m = 4;
  const OperatorWindow S = random_matrix(rng, m);
  const Signal f4 = random_signal(rng, m);
  const VecPhaseField V = op_stft(S, f4);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t k = 0; k < m; ++k) {
      const Signal expect = S.apply(tf_shift_adjoint(f4, PhasePoint{x, k}));
      for (std::size_t t = 0; t < m; ++t)
        CHECK(std::abs(V(x, k)[t] - expect[t]) < 1e-13);
    }
}

TEST_CASE("isometry and reconstruction") {
  const std::size_t n = 8;
  Rng rng(42);
  const OperatorWindow S = random_matrix(rng, n), T = random_matrix(rng, n);
  const Signal f = random_signal(rng, n);
  const Weight one(n, 1.0, WeightKind::moderate);

  const double lhs = mixed_norm_vec(op_stft(S, f), {2.0, 2.0, one});
  CHECK(std::abs(lhs - S.frobenius() * norm2(f)) <
        1e-11 * (S.frobenius() * norm2(f) + 1.0));

  const Signal h = op_stft_adjoint(T, op_stft(S, f));
  const cplx c = hs_inner(S, T);
  for (std::size_t t = 0; t < n; ++t)
    CHECK(std::abs(h[t] - c * f[t]) <
          1e-10 * (norm2(f) * S.frobenius() * T.frobenius() + 1.0));

  const Signal z = op_stft_adjoint(T, VecPhaseField(n));
  CHECK(norm2(z) == 0.0);
}

TEST_CASE("b-norm special values") {
  const std::size_t n = 6;
  const Weight one(n, 1.0, WeightKind::moderate);
  const OperatorWindow I = OperatorWindow::identity(n);
  CHECK(std::abs(b_norm(I, 2.0, 2.0, one) - std::sqrt(static_cast<double>(n))) < 1e-11);

  Rng rng(43);
  const OperatorWindow S = random_matrix(rng, n);
  CHECK(std::abs(b_norm(S, 2.0, 2.0, one) - schatten_norm(S, 2.0)) <
        1e-10 * (S.frobenius() + 1.0));

  CHECK_THROWS_AS(b_norm(S, 2.0, 2.0, one, Signal(n)), domain_error);
}

TEST_CASE("isometric embedding of modulation norms") {
  // S = g0 (x) f has window field |V_{g0} f(-z)|, so the B norm equals the
  // modulation norm of f with the reflected weight.
  const std::size_t n = 8;
  const Signal g0 = gaussian_window(n);
  Rng rng(44);
  const Signal f = random_signal(rng, n);
  const OperatorWindow S = OperatorWindow::rank_one(g0, f);
  const Weight m = weight_polynomial(n, 1.0);
  const PhaseField V = stft(f, g0);
  for (double p : {1.0, 2.0, kInfExp})
    for (double q : {1.0, 4.0}) {
      PhaseField refl(n);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t xi = 0; xi < n; ++xi)
          refl(x, xi) = V.at_mod(-static_cast<long long>(x), -static_cast<long long>(xi));
      const double lhs = b_norm(S, p, q, m);
      const double rhs = mixed_norm(refl, {p, q, m});
      CHECK(std::abs(lhs - rhs) < 1e-11 * (rhs + 1.0));
    }
}

TEST_CASE("nuclear bound") {
  const std::size_t n = 6;
  const Weight v = weight_polynomial(n, 2.0);
  Rng rng(45);

  const Signal xi = random_signal(rng, n), phi = random_signal(rng, n);
  const OperatorWindow R = OperatorWindow::rank_one(xi, phi);
  const double closed = norm2(xi) * m1v_norm(phi, v);
  CHECK(std::abs(nuclear_bound(R, v) - closed) < 1e-10 * (closed + 1.0));

  CHECK(nuclear_bound(OperatorWindow(n), v) == 0.0);

  const OperatorWindow S = random_matrix(rng, n);
  CHECK(b_norm(S, 1.0, 1.0, v) <= nuclear_bound(S, v) + 1e-9);

  const Weight not_sub(n, 1.0, WeightKind::moderate);
  CHECK_THROWS_AS(nuclear_bound(S, not_sub), domain_error);
}
