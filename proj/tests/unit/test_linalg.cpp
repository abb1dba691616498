#include <doctest.h>

#include <cmath>
#include <complex>

#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "memlab/core.hpp"
#include "memlab/linalg.hpp"
#include "memlab/targets/teacher.hpp"

using namespace memlab;

namespace {

Matrix random_hurwitz(Rng& rng, Eigen::Index m, Scalar abscissa) {
  return shift_to_abscissa(gaussian_matrix(rng, m, m, 1.0 / std::sqrt(static_cast<Scalar>(m))), abscissa);
}

Scalar rel_err(const Matrix& a, const Matrix& b) { return (a - b).norm() / std::max<Scalar>(1e-300, b.norm()); }

}  // namespace

TEST_CASE("spectral abscissa of small matrices") {
  const auto r1 = spectral_abscissa(Matrix(-Matrix::Identity(2, 2)));
  CHECK(r1.abscissa == doctest::Approx(-1.0));
  CHECK(r1.is_hurwitz);
  CHECK(r1.eigenvalues.size() == 2);

  Matrix rot(2, 2);
  rot << 0, 1, -1, 0;
  const auto r2 = spectral_abscissa(rot);
  CHECK(std::abs(r2.abscissa) < 1e-15);
  CHECK_FALSE(r2.is_hurwitz);

  Matrix fig7(2, 2);
  fig7 << 1, 1, -4, -3;
  // Defective double eigenvalue: perturbation of order sqrt(eps).
  CHECK(spectral_abscissa(fig7).abscissa == doctest::Approx(-1.0).epsilon(1e-7));
}

TEST_CASE("abscissa agrees with companion-matrix roots") {
  Rng rng(11);
  std::uniform_real_distribution<Scalar> u(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    // Roots chosen first: conjugate pairs plus reals, degree <= 6.
    std::vector<std::complex<Scalar>> roots;
    const int pairs = trial % 3;
    for (int p = 0; p < pairs; ++p) {
      const std::complex<Scalar> z(u(rng), 0.1 + std::abs(u(rng)));
      roots.push_back(z);
      roots.push_back(std::conj(z));
    }
    const int reals = 1 + trial % (7 - 2 * pairs);
    for (int r = 0; r < reals && roots.size() < 6; ++r) roots.emplace_back(u(rng), 0.0);
    std::vector<std::complex<Scalar>> poly{1.0};
    for (const auto& z : roots) {
      std::vector<std::complex<Scalar>> next(poly.size() + 1, 0.0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i];
        next[i + 1] -= z * poly[i];
      }
      poly = next;
    }
    const auto n = static_cast<Eigen::Index>(roots.size());
    Matrix C = Matrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) C(0, j) = -poly[static_cast<std::size_t>(j + 1)].real();
    for (Eigen::Index i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    Scalar expected = -1e300;
    for (const auto& z : roots) expected = std::max(expected, z.real());
    CHECK(spectral_abscissa(C).abscissa == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("spectral abscissa rejects bad input") {
  CHECK_THROWS_AS(spectral_abscissa(Matrix::Zero(2, 3)), DomainError);
  Matrix A = Matrix::Zero(2, 2);
  A(0, 0) = std::nan("");
  CHECK_THROWS_AS(spectral_abscissa(A), DomainError);
}

TEST_CASE("expm closed forms") {
  Rng rng(3);
  const Matrix A = gaussian_matrix(rng, 5, 5);
  CHECK(rel_err(expm(A, 0.0), Matrix::Identity(5, 5)) < 1e-15);

  const Matrix D = -Matrix::Identity(1, 1);
  CHECK(expm(D, std::log(2.0))(0, 0) == doctest::Approx(0.5).epsilon(1e-14));

  Matrix N(2, 2);
  N << 0, 1, 0, 0;
  for (Scalar t : {0.3, 2.0, 17.0}) {
    Matrix expected(2, 2);
    expected << 1, t, 0, 1;
    CHECK(rel_err(expm(N, t), expected) < 1e-14);
  }
}

TEST_CASE("expm matches an eigen-decomposition oracle on symmetric matrices") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix B = gaussian_matrix(rng, 6, 6);
    const Matrix S = 0.5 * (B + B.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> es(S);
    const Matrix oracle = es.eigenvectors() * es.eigenvalues().array().exp().matrix().asDiagonal() *
                          es.eigenvectors().transpose();
    CHECK(rel_err(expm(S), oracle) < 1e-12);
  }
}

TEST_CASE("expm agrees with Eigen's MatrixFunctions") {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix A = gaussian_matrix(rng, 8, 8, 1.5);
    const Matrix ref = A.exp();
    CHECK(rel_err(expm(A), ref) < 1e-11);
  }
}

TEST_CASE("expm halved-step self-consistency and semigroup") {
  Rng rng(9);
  std::uniform_real_distribution<Scalar> u(0.0, 2.0);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = static_cast<Eigen::Index>(1 + trial % 16);
    const Matrix A = gaussian_matrix(rng, m, m, 1.0 / std::sqrt(static_cast<Scalar>(m)));
    const Scalar s = u(rng), t = u(rng);
    const Matrix half = expm(A, t / 2);
    CHECK(rel_err(expm(A, t), half * half) < 1e-10);
    const Matrix lhs = expm(A, s + t);
    CHECK(spectral_norm(Matrix(lhs - expm(A, s) * expm(A, t))) <= 1e-8);
  }
}

TEST_CASE("expm overflow is a numeric failure") {
  const Matrix A = Matrix::Constant(2, 2, 1e3);
  CHECK_THROWS_AS(expm(A, 10.0), NumericFailure);
}

TEST_CASE("lyapunov on a scaled identity") {
  for (Scalar beta : {0.25, 1.0, 4.0}) {
    const Matrix W = -beta * Matrix::Identity(4, 4);
    const Matrix P = lyapunov_solve(W, Matrix::Identity(4, 4));
    CHECK(rel_err(P, Matrix::Identity(4, 4) / (2 * beta)) < 1e-14);
  }
}

TEST_CASE("lyapunov residual, symmetry and definiteness") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix W = random_hurwitz(rng, 8, -0.1 - 0.1 * trial);
    const Matrix B = gaussian_matrix(rng, 8, 8);
    const Matrix Q = B * B.transpose() + Matrix::Identity(8, 8);
    const Matrix P = lyapunov_solve(W, Q);
    CHECK(lyapunov_residual(W, P, Q) <= 1e-8 * spectral_norm(Q));
    CHECK((P - P.transpose()).cwiseAbs().maxCoeff() <= 1e-10);
    Eigen::SelfAdjointEigenSolver<Matrix> es(P);
    CHECK(es.eigenvalues().minCoeff() > 0);
  }
}

TEST_CASE("lyapunov methods and quadrature agree") {
  Rng rng(22);
  const Matrix W = random_hurwitz(rng, 6, -0.5);
  const Matrix Q = Matrix::Identity(6, 6);
  LyapunovOptions kron{LyapunovMethod::Kronecker, 64};
  LyapunovOptions schur{LyapunovMethod::Schur, 64};
  const Matrix Pk = lyapunov_solve(W, Q, kron);
  const Matrix Ps = lyapunov_solve(W, Q, schur);
  CHECK(rel_err(Ps, Pk) < 1e-10);
  const Matrix Pq = lyapunov_integral(W, Q, 80.0, 8000);
  CHECK(rel_err(Pq, Pk) < 1e-7);
}

TEST_CASE("lyapunov rejects non-Hurwitz W") {
  CHECK_THROWS_AS(lyapunov_solve(Matrix(Matrix::Identity(3, 3)), Matrix(Matrix::Identity(3, 3))), DomainError);
}

TEST_CASE("norm bound 1/(2 beta0) holds for normal Hurwitz matrices") {
  Rng rng(23);
  for (Scalar beta0 : {0.25, 1.0, 4.0}) {
    for (int trial = 0; trial < 20; ++trial) {
      // Normal: orthogonal similarity of a real block-diagonal matrix.
      const Eigen::Index m = 2 * (1 + trial % 4);
      Matrix D = Matrix::Zero(m, m);
      std::uniform_real_distribution<Scalar> u(0.0, 3.0);
      for (Eigen::Index k = 0; k < m; k += 2) {
        const Scalar re = -beta0 - u(rng), im = u(rng);
        D(k, k) = D(k + 1, k + 1) = re;
        D(k, k + 1) = im;
        D(k + 1, k) = -im;
      }
      D(0, 0) = D(1, 1) = -beta0;
      Eigen::HouseholderQR<Matrix> qr(gaussian_matrix(rng, m, m));
      const Matrix Qo = qr.householderQ();
      const Matrix W = Qo * D * Qo.transpose();
      const Matrix P = lyapunov_solve(W, Matrix::Identity(m, m));
      CHECK(spectral_norm(P) <= 1 / (2 * beta0) + 1e-8);
    }
  }
}

TEST_CASE("norm bound 1/(2 beta0) can fail for non-normal Hurwitz matrices") {
  // W = [[-1, a], [0, -1]] has abscissa -1 but |P|_2 grows like a^2 / 8.
  Matrix W(2, 2);
  W << -1, 4, 0, -1;
  const Matrix P = lyapunov_solve(W, Matrix(Matrix::Identity(2, 2)));
  CHECK(spectral_norm(P) > 0.5 + 1.0);
}

TEST_CASE("param norm") {
  const RnnParams id(Matrix::Identity(3, 3), Matrix::Identity(3, 3), Vector::Zero(3), Vector::Zero(3));
  CHECK(param_norm(id) == doctest::Approx(1.0).epsilon(1e-12));
  const RnnParams two(2 * Matrix::Identity(3, 3), Matrix::Zero(3, 1), Vector::Zero(3), Vector::Zero(3));
  CHECK(param_norm(two) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("spectral norm matches an SVD oracle") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = static_cast<Eigen::Index>(1 + trial % 12);
    const RnnParams p(gaussian_matrix(rng, m, m), gaussian_matrix(rng, m, 2), gaussian_vector(rng, m),
                      gaussian_vector(rng, m));
    Eigen::JacobiSVD<Matrix> sw(p.W()), su(p.U);
    const Scalar oracle = std::max({sw.singularValues()(0), su.singularValues()(0), p.b.norm(), p.c.norm()});
    CHECK(std::abs(param_norm(p) - oracle) <= 1e-8 * oracle);
  }
}
