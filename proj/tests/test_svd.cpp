#include <catch2/catch_amalgamated.hpp>

#include "opwin/operator_window.hpp"
#include "opwin/rng.hpp"

using namespace opwin;

TEST_CASE("schatten norms of simple matrices") {
  const std::size_t n = 4;
  const OperatorWindow I = OperatorWindow::identity(n);
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    CHECK(std::abs(schatten_norm(I, p) - std::pow(4.0, 1.0 / p)) < 1e-12);
  }
  CHECK(std::abs(schatten_norm(I, kInfExp) - 1.0) < 1e-13);

  Rng rng(31);
  const Signal xi = random_signal(rng, n), phi = random_signal(rng, n);
  const OperatorWindow R = OperatorWindow::rank_one(xi, phi);
  for (double p : {1.0, 2.0, 4.0, kInfExp}) {
    CHECK(std::abs(schatten_norm(R, p) - norm2(xi) * norm2(phi)) <
          1e-11 * norm2(xi) * norm2(phi));
  }

  OperatorWindow D(2);
  D(0, 0) = cplx{3.0, 0.0};
  D(1, 1) = cplx{4.0, 0.0};
  CHECK(std::abs(schatten_norm(D, 2.0) - 5.0) < 1e-13);
  CHECK_THROWS_AS(schatten_norm(D, 0.5), domain_error);
}

TEST_CASE("svd residual and two-sided validation") {
  Rng rng(32);
  for (std::size_t n : {2u, 3u, 5u, 8u, 12u}) {
    const OperatorWindow A = random_matrix(rng, n);
    const SvdResult svd = jacobi_svd(A);
    CHECK(svd_residual(A, svd) <= 1e-10 * (A.frobenius() + 1.0));
    // descending order
    for (std::size_t j = 0; j + 1 < n; ++j)
      CHECK(svd.singular_values[j] >= svd.singular_values[j + 1] - 1e-14);
    // cross-check against eigenvalues of A^* A
    const EigResult eig = hermitian_eig(A.adjoint() * A);
    for (std::size_t j = 0; j < n; ++j) {
      const double lam = std::max(0.0, eig.eigenvalues[n - 1 - j]);
      CHECK(std::abs(svd.singular_values[j] - std::sqrt(lam)) <
            1e-10 * (A.frobenius() + 1.0));
    }
    // p = 2 equals the Frobenius norm
    CHECK(std::abs(schatten_norm(A, 2.0) - A.frobenius()) < 1e-11 * (A.frobenius() + 1.0));
    // U, V unitary
    const OperatorWindow utu = svd.U.adjoint() * svd.U;
    const OperatorWindow vtv = svd.V.adjoint() * svd.V;
    CHECK((utu - OperatorWindow::identity(n)).frobenius() < 1e-12 * static_cast<double>(n));
    CHECK((vtv - OperatorWindow::identity(n)).frobenius() < 1e-12 * static_cast<double>(n));
  }
}

TEST_CASE("hermitian eigendecomposition") {
  Rng rng(33);
  const std::size_t n = 6;
  const OperatorWindow T = random_hermitian_psd(rng, n);
  const EigResult eig = hermitian_eig(T);
  for (std::size_t j = 0; j + 1 < n; ++j)
    CHECK(eig.eigenvalues[j] <= eig.eigenvalues[j + 1] + 1e-14);
  // reconstruction
  OperatorWindow rec(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k)
        s += eig.vectors(i, k) * eig.eigenvalues[k] * std::conj(eig.vectors(j, k));
      rec(i, j) = s;
    }
  CHECK((rec - T).frobenius() < 1e-11 * (T.frobenius() + 1.0));

  const OperatorWindow A = random_matrix(rng, n);
  CHECK_THROWS_AS(hermitian_eig(A), domain_error);
}

TEST_CASE("psd square root") {
  OperatorWindow D(2);
  D(0, 0) = cplx{4.0, 0.0};
  D(1, 1) = cplx{9.0, 0.0};
  const OperatorWindow R = psd_sqrt(D);
  CHECK(std::abs(R(0, 0) - cplx{2.0, 0.0}) < 1e-12);
  CHECK(std::abs(R(1, 1) - cplx{3.0, 0.0}) < 1e-12);
  CHECK(std::abs(R(0, 1)) < 1e-12);

  // orthogonal projection is its own square root
  const std::size_t n = 5;
  Rng rng(34);
  const Signal u = random_unit_signal(rng, n);
  const OperatorWindow P = OperatorWindow::rank_one(u, u);
  // zero eigenvalues are only accurate to sqrt(eps) after the root
  CHECK((psd_sqrt(P) - P).frobenius() < 1e-8);

  const OperatorWindow T = random_hermitian_psd(rng, n);
  const OperatorWindow S = psd_sqrt(T);
  CHECK((S * S - T).frobenius() < 1e-9 * (1.0 + T.frobenius()));
  CHECK(S.hermitian_defect() < 1e-10 * (1.0 + S.frobenius()));

  // significantly negative eigenvalue must be rejected
  OperatorWindow neg(2);
  neg(0, 0) = cplx{1.0, 0.0};
  neg(1, 1) = cplx{-0.5, 0.0};
  CHECK_THROWS_AS(psd_sqrt(neg), domain_error);
}

TEST_CASE("trace and hs inner product") {
  const std::size_t n = 4;
  CHECK(std::abs(trace(OperatorWindow::identity(n)) - cplx{4.0, 0.0}) < 1e-15);
  Rng rng(35);
  const Signal xi = random_signal(rng, n), phi = random_signal(rng, n);
  CHECK(std::abs(trace(OperatorWindow::rank_one(xi, phi)) - inner(xi, phi)) < 1e-13);

  const OperatorWindow T = random_matrix(rng, n);
  const double hs2 = std::real(hs_inner(T, T));
  double entries = 0.0;
  for (const auto& e : T.entries()) entries += std::norm(e);
  CHECK(std::abs(hs2 - entries) < 1e-12 * (entries + 1.0));
  CHECK(std::abs(hs2 - schatten_norm(T, 2.0) * schatten_norm(T, 2.0)) <
        1e-11 * (entries + 1.0));
}
