#include <doctest.h>

#include <cmath>

#include "memlab/approx.hpp"
#include "memlab/core.hpp"
#include "memlab/linalg.hpp"
#include "memlab/memory.hpp"
#include "memlab/targets.hpp"

using namespace memlab;

namespace {

const TimeGrid kFitGrid(1, 100, 1);

Scalar squared_residual(const MemoryKernel& rho, const ExpSumModel& m, const TimeGrid& g) {
  Scalar s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Scalar r = rho.profile(g[i]) - m(g[i]);
    s += r * r;
  }
  return s;
}

}  // namespace

TEST_CASE("a basis member is fitted exactly") {
  const TimeGrid g(0.1, 10, 0.1);
  const MemoryKernel e = MemoryKernel::exp_decay(std::exp(-1.0));
  for (std::size_t m : {1, 2, 4, 8}) {
    const ExpSumFit f = fit_exponential_sum(e, m, g);
    CHECK(f.residual <= 1e-10);
    // Damping biases c by about damping / sigma_min^2, which grows with m.
    const Scalar tol = m <= 4 ? 1e-8 : 1e-5;
    CHECK(std::abs(f.model.coefficients(0) - 1.0) <= tol);
    for (Eigen::Index k = 1; k < static_cast<Eigen::Index>(m); ++k) CHECK(std::abs(f.model.coefficients(k)) <= tol);
  }
}

TEST_CASE("residual decreases with m for nested bases") {
  for (Scalar rate : {1.0, 0.05}) {
    const MemoryKernel rho = MemoryKernel::exp_decay(0.9);
    Scalar prev = std::numeric_limits<Scalar>::infinity();
    for (std::size_t m : {2, 4, 8, 16}) {
      const ExpSumFit f = fit_exponential_sum(rho, m, kFitGrid, ExpSumMode::Standard, rate);
      CHECK(f.residual < prev);
      prev = f.residual;
    }
  }
}

TEST_CASE("polynomial kernels fit worse than exponential ones") {
  const Scalar rate = 0.05;
  const ExpSumFit e = fit_exponential_sum(MemoryKernel::exp_decay(0.9), 16, kFitGrid, ExpSumMode::Standard, rate);
  const ExpSumFit p = fit_exponential_sum(MemoryKernel::poly_decay(1.1), 16, kFitGrid, ExpSumMode::Standard, rate);
  MESSAGE("m=16 residuals: exp " << e.residual << ", poly " << p.residual);
  CHECK(p.residual >= 10 * e.residual);
}

TEST_CASE("fitted coefficients are first-order optimal") {
  const MemoryKernel rho = MemoryKernel::poly_decay(1.5);
  const ExpSumFit f = fit_exponential_sum(rho, 4, kFitGrid, ExpSumMode::Standard, 0.2);
  const Scalar base = squared_residual(rho, f.model, kFitGrid);
  for (Eigen::Index k = 0; k < 4; ++k)
    for (Scalar s : {1e-3, -1e-3}) {
      ExpSumModel q = f.model;
      q.coefficients(k) += s;
      CHECK(squared_residual(rho, q, kFitGrid) >= base);
    }
}

TEST_CASE("rescaled exponents and the RNN view") {
  const Vector r = ExpSumModel::exponents_for(ExpSumMode::Rescaled, 4, 1.0);
  CHECK(r(0) == -1.0);
  CHECK(r(3) == doctest::Approx(-0.25));
  CHECK((ExpSumModel::exponents_for(ExpSumMode::Standard, 3, 0.5) - Vector::LinSpaced(3, -0.5, -1.5)).norm() <= 1e-15);

  const ExpSumFit f = fit_exponential_sum(MemoryKernel::poly_decay(1.1), 6, kFitGrid, ExpSumMode::Rescaled, 0.3);
  const RnnParams p = f.model.to_rnn();
  Rng rng(1);
  std::uniform_real_distribution<Scalar> u(0, 50);
  for (int i = 0; i < 100; ++i) {
    const Scalar t = u(rng);
    const Scalar view = (p.c.transpose() * expm(p.W(), t) * p.U)(0, 0);
    CHECK(std::abs(view - f.model(t)) <= 1e-10);
  }
}

TEST_CASE("linear L1 error") {
  const TimeGrid g(0.1, 20, 0.1);
  const MemoryKernel e1 = MemoryKernel::exp_decay(std::exp(-1.0));
  ExpSumModel exact{ExpSumMode::Standard, 1.0, Vector::Unit(3, 0)};
  CHECK(linear_L1_error(e1, exact.to_rnn(), g) <= 1e-10);

  const MemoryKernel e2 = MemoryKernel::exp_decay(std::exp(-2.0));
  const RnnParams one(-Matrix::Identity(1, 1), Matrix::Ones(1, 1), Vector::Zero(1), Vector::Ones(1));
  Scalar direct = 0;
  for (std::size_t i = 0; i < g.size(); ++i) direct += std::abs(std::exp(-g[i]) - std::exp(-2 * g[i])) * g.dt();
  CHECK(linear_L1_error(e2, one, g) == doctest::Approx(direct).epsilon(1e-10));

  TeacherSpectrum s;
  s.abscissa = -0.3;
  const RnnParams theta = draw_teacher_params(3, 5, 1, s);
  Rng rng(4);
  const Matrix P = gaussian_matrix(rng, 5, 5) + 3 * Matrix::Identity(5, 5);
  const Matrix Pi = P.inverse();
  const RnnParams conj(P * theta.W() * Pi, P * theta.U, Vector::Zero(5), Pi.transpose() * theta.c);
  const MemoryKernel k = MemoryKernel::poly_decay(1.5);
  CHECK(linear_L1_error(k, conj, g) == doctest::Approx(linear_L1_error(k, theta, g)).epsilon(1e-8));

  const RnnParams unstable(Matrix::Identity(1, 1) * 400, Matrix::Ones(1, 1), Vector::Zero(1), Vector::Ones(1));
  CHECK(std::isinf(linear_L1_error(k, unstable, TimeGrid(0, 100, 1))));
}

TEST_CASE("Sobolev estimator") {
  const TimeGrid g(0, 30, 0.01);
  const MemoryKernel a = MemoryKernel::exp_decay(0.9), b = MemoryKernel::exp_decay(0.8);
  const FunctionalTarget ta = make_linear_target(a), tb = make_linear_target(b);
  const ProbeSet probes = make_probe_set({Vector::Ones(1)}, 0, g, 1);
  CHECK(sobolev_error(ta, ta, probes) == 0.0);

  // Closed form sup_t (|int_0^t (rho - rho_hat)| + |rho(t) - rho_hat(t)|) on the grid.
  Scalar ref = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Scalar t = g[i];
    // Simpson quadrature of the difference, 200 panels.
    const int n = 200;
    const Scalar h = t / n;
    Scalar q = 0;
    if (t > 0) {
      for (int j = 0; j <= n; ++j) {
        const Scalar s = j * h;
        const Scalar w = (j == 0 || j == n) ? 1 : (j % 2 ? 4 : 2);
        q += w * (a.profile(s) - b.profile(s));
      }
      q *= h / 3;
    }
    ref = std::max(ref, std::abs(q) + std::abs(a.profile(t) - b.profile(t)));
  }
  CHECK(sobolev_error(ta, tb, probes) == doctest::Approx(ref).epsilon(1e-8));

  const ProbeSet p1 = make_probe_set(default_amplitudes(), 4, g, 7);
  std::vector<Vector> doubled;
  for (const auto& x : default_amplitudes()) doubled.push_back(2 * x);
  const ProbeSet p2 = make_probe_set(doubled, 0, g, 7);
  const ProbeSet p0 = make_probe_set(default_amplitudes(), 0, g, 7);
  CHECK(sobolev_error(ta, tb, p2) == doctest::Approx(sobolev_error(ta, tb, p0)).epsilon(1e-12));
  CHECK(sobolev_error(ta, tb, p1) >= sobolev_error(ta, tb, p0));
  CHECK(p1.signals.size() == default_amplitudes().size() + 4);
  for (std::size_t i = 0; i < p1.signals.size(); ++i) CHECK(p1.norms[i] <= 2.0);

  const ProbeResponses cached = evaluate_probes(ta, p1);
  CHECK(sobolev_error(cached, tb, p1) == sobolev_error(ta, tb, p1));
}

TEST_CASE("diverging models have infinite Sobolev error") {
  const TimeGrid g(0, 50, 0.1);
  const RnnParams blow(Matrix::Identity(1, 1) * 30, Matrix::Ones(1, 1), Vector::Zero(1), Vector::Ones(1));
  const ProbeSet probes = make_probe_set({Vector::Ones(1)}, 0, g, 1);
  const Scalar e = sobolev_error(make_linear_target(MemoryKernel::exp_decay(0.9)),
                                 make_rnn_target(blow, Activation::linear()), probes);
  CHECK(std::isinf(e));
}
