#include <catch2/catch_amalgamated.hpp>

#include "opwin/cohen.hpp"
#include "opwin/rng.hpp"

using namespace opwin;

TEST_CASE("cohen distribution examples") {
  const std::size_t n = 4;
  const Signal g0 = gaussian_window(n);
  Rng rng(51);
  const Signal f = random_signal(rng, n);

  // T = g0 (x) g0 gives the spectrogram |V_{g0} f|^2
  const PhaseField Q = cohen(OperatorWindow::rank_one(g0, g0), f);
  const PhaseField V = stft(f, g0);
  for (std::size_t i = 0; i < Q.values().size(); ++i)
    CHECK(std::abs(Q.values()[i] - cplx{std::norm(V.values()[i]), 0.0}) <
          1e-12 * (norm2(f) * norm2(f) + 1.0));

  // T = I gives the constant energy field
  const PhaseField QI = cohen(OperatorWindow::identity(n), f);
  for (const auto& q : QI.values())
    CHECK(std::abs(q - cplx{norm2(f) * norm2(f), 0.0}) < 1e-12 * (norm2(f) * norm2(f) + 1.0));

  // psd T: pointwise match with || V_{sqrt T} f ||^2
  const std::size_t m = 6;
  const OperatorWindow T = random_hermitian_psd(rng, m);
  const Signal fm = random_signal(rng, m);
  const PhaseField Qm = cohen(T, fm);
  const VecPhaseField VS = op_stft(psd_sqrt(T), fm);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t xi = 0; xi < m; ++xi) {
      const double nn = norm2(VS(x, xi));
      CHECK(std::abs(Qm(x, xi).real() - nn * nn) <
            1e-9 * (T.frobenius() * norm2(fm) * norm2(fm) + 1.0));
      CHECK(Qm(x, xi).real() >= -1e-11 * (T.frobenius() * norm2(fm) * norm2(fm) + 1.0));
    }
}

TEST_CASE("localization operator conventions") {
  const std::size_t n = 4;
  Rng rng(52);
  const Signal phi1 = random_unit_signal(rng, n), phi2 = random_unit_signal(rng, n);

  // a == 1 -> <phi2, phi1> I
  PhaseField ones(n);
  for (auto& v : ones.values()) v = cplx{1.0, 0.0};
  const OperatorWindow A1 = localization(ones, phi1, phi2);
  const OperatorWindow expect = OperatorWindow::identity(n).scaled(inner(phi2, phi1));
  CHECK((A1 - expect).frobenius() < 1e-11);

  // weak form against a brute-force pairing
  const PhaseField a = random_field(rng, n);
  const OperatorWindow A = localization(a, phi1, phi2);
  const Signal f = random_signal(rng, n), g = random_signal(rng, n);
  const PhaseField V1 = stft(f, phi1), V2 = stft(g, phi2);
  cplx weak{0.0, 0.0};
  for (std::size_t i = 0; i < a.values().size(); ++i)
    weak += a.values()[i] * V1.values()[i] * std::conj(V2.values()[i]);
  weak /= static_cast<double>(n);
  CHECK(std::abs(inner(A.apply(f), g) - weak) < 1e-11 * (norm2(f) * norm2(g) + 1.0));

  // atom symbol
  PhaseField atom(n);
  atom(2, 1) = cplx{static_cast<double>(n), 0.0};
  const OperatorWindow Aat = localization(atom, phi1, phi2);
  const OperatorWindow Rat = OperatorWindow::rank_one(tf_shift(phi2, PhasePoint{2, 1}),
                                                      tf_shift(phi1, PhasePoint{2, 1}));
  CHECK((Aat - Rat).frobenius() < 1e-11);

  // nonnegative symbol with equal windows is psd
  const std::size_t m = 6;
  Rng rng2(53);
  const PhaseField nn = random_nonneg_field(rng2, m);
  const Signal g0 = gaussian_window(m);
  const OperatorWindow P = localization(nn, g0, g0);
  const OperatorWindow H = P.scaled(cplx{0.5, 0.0}) + P.adjoint().scaled(cplx{0.5, 0.0});
  const EigResult eig = hermitian_eig(H);
  CHECK(eig.eigenvalues.front() >= -1e-10 * (1.0 + P.frobenius()));
}

TEST_CASE("symbol modulation norm") {
  const std::size_t n = 4;
  CHECK(symbol_mod_norm(PhaseField(n), 2.0, 2.0) == 0.0);

  // p = q = 2 reduces to the L^2(mu) norm of the symbol (double-phase Moyal
  // with the unit-energy window V_{g0} g0)
  Rng rng(54);
  const PhaseField a = random_field(rng, n);
  CHECK(std::abs(symbol_mod_norm(a, 2.0, 2.0) - l2_mu(a)) < 1e-11 * (l2_mu(a) + 1.0));

  // atom at z0, p = q = inf: direct enumeration oracle
  PhaseField atom(n);
  atom(1, 3) = cplx{2.0, 0.0};
  const Signal g0 = gaussian_window(n);
  const PhaseField Psi = stft(g0, g0);
  double expect = 0.0;
  for (const auto& v : Psi.values()) expect = std::max(expect, std::abs(v));
  expect *= 2.0 / static_cast<double>(n);
  CHECK(std::abs(symbol_mod_norm(atom, kInfExp, kInfExp) - expect) < 1e-12);

  CHECK_THROWS_AS(symbol_mod_norm(PhaseField(25), 2.0, 2.0), resource_error);
  CHECK_THROWS_AS(symbol_mod_norm(a, 0.5, 2.0), domain_error);
}

TEST_CASE("b1v localization value") {
  const std::size_t n = 6;
  const Signal g0 = gaussian_window(n);
  const Weight v = weight_polynomial(n, 1.0);

  CHECK(b1v_localization_value(PhaseField(n), g0, v) == 0.0);

  // constant symbol, v == 1: closed form from the total mass of Psi
  const Weight one(n, 1.0, WeightKind::unchecked);
  PhaseField c(n);
  for (auto& x : c.values()) x = cplx{0.7, 0.0};
  const PhaseField V = stft(g0, g0);
  double psi_mass = 0.0;
  for (const auto& x : V.values()) psi_mass += std::norm(x) / static_cast<double>(n);
  // h is the constant 0.7 * psi_mass, so the L^{1/2} quasi-norm is n^2 times...
  const double h = 0.7 * psi_mass;
  const double expect = std::sqrt(h) * static_cast<double>(n);  // ((1/N) N^2 sqrt(h))^2, rooted
  CHECK(std::abs(b1v_localization_value(c, g0, one) - expect) < 1e-10);

  // pipeline equality with the operator route
  Rng rng(55);
  const PhaseField a = random_nonneg_field(rng, n);
  const Weight v2 = weight_polynomial(n, 2.0);
  const double direct = b1v_localization_value(a, g0, v2);
  const OperatorWindow A = localization(a, g0, g0);
  const OperatorWindow H = A.scaled(cplx{0.5, 0.0}) + A.adjoint().scaled(cplx{0.5, 0.0});
  const double viaop = b_norm(psd_sqrt(H), 1.0, 1.0, v2);
  CHECK(std::abs(direct - viaop) < 1e-8 * (direct + 1.0));

  PhaseField negsym(n);
  negsym(0, 0) = cplx{-1.0, 0.0};
  CHECK_THROWS_AS(b1v_localization_value(negsym, g0, v), domain_error);
}
