#include <doctest.h>

#include <cmath>

#include "memlab/approx.hpp"
#include "memlab/core.hpp"
#include "memlab/linalg.hpp"
#include "memlab/stability.hpp"
#include "memlab/targets.hpp"

using namespace memlab;

namespace {

RnnParams random_params(std::uint64_t seed, std::size_t m) {
  TeacherSpectrum s;
  s.abscissa = -0.5;
  s.bias_scale = 0.3;
  return draw_teacher_params(seed, m, 1, s);
}

Scalar max_diff_norm(const RnnParams& a, const RnnParams& b) {
  return std::max({spectral_norm(Matrix(a.W() - b.W())), spectral_norm(Matrix(a.U - b.U)), (a.b - b.b).norm(),
                   (a.c - b.c).norm()});
}

SweepTable synthetic_table(const std::vector<std::size_t>& ms, const std::vector<Scalar>& betas,
                           const std::function<Scalar(std::size_t, Scalar)>& E) {
  SweepTable t;
  t.ms = ms;
  t.betas = betas;
  t.errors.resize(static_cast<Eigen::Index>(ms.size()), static_cast<Eigen::Index>(betas.size()));
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = 0; j < betas.size(); ++j)
      t.errors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = E(ms[i], betas[j]);
    t.base_error.push_back(E(ms[i], 0));
    t.abscissa.push_back(-1);
  }
  return t;
}

}  // namespace

TEST_CASE("perturbation at radius zero is the identity") {
  const RnnParams p = random_params(1, 5);
  const RnnParams q = perturb_params(p, 0.0, 7, 3);
  CHECK(q.W() == p.W());
  CHECK(q.U == p.U);
  CHECK(q.b == p.b);
  CHECK(q.c == p.c);
}

TEST_CASE("perturbations lie on the boundary of the ball") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const RnnParams p = random_params(i, 6);
    for (Scalar beta : {1e-6, 1e-2, 0.5}) {
      const RnnParams q = perturb_params(p, beta, 11, i);
      CHECK(param_norm(RnnParams(Matrix(q.W() - p.W()), Matrix(q.U - p.U), Vector(q.b - p.b), Vector(q.c - p.c))) ==
            doctest::Approx(beta).epsilon(1e-8));
      CHECK(std::abs(spectral_norm(Matrix(q.W() - p.W())) - beta) <= 1e-8);
      CHECK(std::abs((q.c - p.c).norm() - beta) <= 1e-12);
    }
  }
  // Reparameterized models perturb M, by max-abs.
  const RnnParams r = RnnParams::reparameterized(ReparamKind::NegExp, Vector::Zero(4), Matrix::Ones(4, 1),
                                                 Vector::Zero(4), Vector::Ones(4));
  const RnnParams s = perturb_params(r, 0.1, 3, 0);
  CHECK((s.M() - r.M()).cwiseAbs().maxCoeff() == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(spectral_abscissa(s.W()).abscissa < 0);
}

TEST_CASE("perturbations are deterministic") {
  const RnnParams p = random_params(2, 4);
  const RnnParams a = perturb_params(p, 0.1, 5, 9), b = perturb_params(p, 0.1, 5, 9), c = perturb_params(p, 0.1, 5, 10);
  CHECK(a.W() == b.W());
  CHECK(a.c == b.c);
  CHECK(max_diff_norm(a, c) > 0);
}

TEST_CASE("masked perturbations leave the other tensors alone") {
  const RnnParams p = random_params(3, 4);
  PerturbationMask mask;
  mask.U = false;
  mask.b = false;
  const RnnParams q = perturb_params(p, 0.2, 1, 1, mask);
  CHECK(q.U == p.U);
  CHECK(q.b == p.b);
  CHECK(q.W() != p.W());
}

TEST_CASE("perturbation error basics") {
  const TimeGrid g(0.1, 20, 0.1);
  const MemoryKernel rho = MemoryKernel::exp_decay(std::exp(-1.0));
  const ErrorFn err = [&](const RnnParams& th) { return linear_L1_error(rho, th, g); };
  const RnnParams p = random_params(4, 3);
  CHECK(perturbation_error(err, p, 0.0, 10, 1) == err(p));
  CHECK(perturbation_error(err, p, 0.1, 8, 1) <= perturbation_error(err, p, 0.1, 16, 1));
  const ErrorFn bad = [](const RnnParams&) -> Scalar { throw NumericFailure("boom"); };
  CHECK(std::isinf(perturbation_error(bad, p, 0.1, 2, 1)));
  const ErrorFn nan = [](const RnnParams&) { return std::numeric_limits<Scalar>::quiet_NaN(); };
  CHECK(std::isinf(guarded_error(nan, p)));
}

TEST_CASE("sampled sup against an exhaustive two-parameter scan") {
  // m = 1, rho = e^{-t}, theta = (w = -1, c = 1); only w and c move.
  const TimeGrid g(0.1, 20, 0.1);
  const MemoryKernel rho = MemoryKernel::exp_decay(std::exp(-1.0));
  const ErrorFn err = [&](const RnnParams& th) { return linear_L1_error(rho, th, g); };
  const RnnParams p(-Matrix::Identity(1, 1), Matrix::Ones(1, 1), Vector::Zero(1), Vector::Ones(1));
  PerturbationMask mask;
  mask.U = false;
  mask.b = false;
  const Scalar beta = 0.5;
  const Scalar est = perturbation_error(err, p, beta, 64, 3, mask);
  Scalar exhaustive = 0;
  const int n = 200;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar w = -1 - beta + 2 * beta * i / (n - 1), c = 1 - beta + 2 * beta * j / (n - 1);
      const RnnParams q(Matrix::Constant(1, 1, w), Matrix::Ones(1, 1), Vector::Zero(1), Vector::Constant(1, c));
      exhaustive = std::max(exhaustive, err(q));
    }
  MESSAGE("sampled " << est << " exhaustive " << exhaustive);
  CHECK(est <= exhaustive * (1 + 1e-12));
  CHECK(est >= 0.9 * exhaustive);
}

TEST_CASE("sweeps") {
  CHECK(linear_beta_grid().size() == 22);
  CHECK(linear_beta_grid()[1] == 5e-4);
  CHECK(linear_beta_grid().back() == doctest::Approx(5e-4 * 1048576));
  CHECK(nonlinear_beta_grid().size() == 37);
  CHECK(nonlinear_beta_grid().back() == doctest::Approx(1e-11 * std::pow(2.0, 35)));

  const TimeGrid g(0.1, 20, 0.1);
  const MemoryKernel rho = MemoryKernel::exp_decay(std::exp(-1.0));
  const ErrorFn err = [&](const RnnParams& th) { return linear_L1_error(rho, th, g); };
  const RnnParams exact(-Matrix::Identity(1, 1), Matrix::Ones(1, 1), Vector::Zero(1), Vector::Ones(1));
  const std::vector<Scalar> full = linear_beta_grid();
  const std::vector<Scalar> betas(full.begin(), full.begin() + 14);
  const std::vector<SweepModel> models{{1, exact}, {3, random_params(5, 3)}};
  const SweepTable t = sweep(models, betas, 8, 17, err, "l1");
  CHECK(t.errors.rows() * t.errors.cols() == 2 * 14);
  CHECK(t.errors(0, 0) <= 1e-12);
  CHECK(t.errors(1, 0) == err(models[1].params));
  for (Eigen::Index j = 1; j < 14; ++j) {
    CHECK(t.errors(0, j) > t.errors(0, j - 1));
    CHECK(t.errors(1, j) >= t.errors(1, j - 1));
  }

  const std::string csv = t.to_csv();
  CHECK(csv.rfind("m,beta,error,n_samples,abscissa\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 28);
  const SweepTable t2 = sweep(models, betas, 8, 17, err, "l1", {}, 2);
  CHECK(t2.to_csv() == csv);
}

TEST_CASE("stability radius estimates on synthetic tables") {
  const std::vector<std::size_t> ms{2, 4, 8, 16};
  const std::vector<Scalar> betas = linear_beta_grid();

  const auto flat = synthetic_table(ms, betas, [](std::size_t m, Scalar) { return 1.0 / m; });
  const StabilityEstimate a = stability_radius_estimate(flat);
  CHECK(a.verdict == Verdict::Stable);
  CHECK(a.beta0_hat == betas.back());

  // Better base fits for larger m, but perturbations cost m * beta.
  const auto grow = synthetic_table(ms, betas, [](std::size_t m, Scalar b) { return 1.0 / m + m * b; });
  const StabilityEstimate b = stability_radius_estimate(grow);
  CHECK(b.verdict == Verdict::Unstable);
  CHECK(b.crossings_shift_left);
  REQUIRE(b.crossings.size() == 3);
  // E_m = E_m' at beta = 1 / (m m').
  CHECK(b.crossings[0] == doctest::Approx(1.0 / 8));
  CHECK(b.crossings[1] == doctest::Approx(1.0 / 32));
  CHECK(b.crossings[2] == doctest::Approx(1.0 / 128));

  const StabilityEstimate c = stability_radius_estimate(grow, std::numeric_limits<Scalar>::infinity());
  CHECK(c.verdict == Verdict::Stable);
  CHECK(c.beta0_hat == betas.back());

  const auto jump = synthetic_table(ms, betas, [](std::size_t, Scalar b) { return b > 0 ? 1.0 : 1e-12; });
  const StabilityEstimate d = stability_radius_estimate(jump);
  CHECK(d.beta0_hat == 0.0);
  CHECK(d.verdict == Verdict::Unstable);

  CHECK_THROWS_AS(stability_radius_estimate(synthetic_table({2}, betas, [](std::size_t, Scalar) { return 1.0; })),
                  DomainError);
  CHECK_THROWS_AS(stability_radius_estimate(synthetic_table(ms, {0, 1}, [](std::size_t, Scalar) { return 1.0; })),
                  DomainError);
}

TEST_CASE("contraction certificate for W = -I") {
  const CertificateReport r = tanh_contraction_certificate(-Matrix::Identity(4, 4), 0.5, 20000, 1);
  CHECK(r.beta0 == doctest::Approx(1.0));
  CHECK(r.M0 == 1.0);
  CHECK(r.P_norm == doctest::Approx(0.5));
  CHECK(r.upsilon == doctest::Approx(std::sqrt(0.5)));
  CHECK(r.passed());
  CHECK(r.worst_margin <= 0);
}

TEST_CASE("contraction certificate for a random Hurwitz W") {
  TeacherSpectrum s;
  s.abscissa = -0.5;
  const Matrix W = draw_teacher_params(21, 8, 1, s).W();
  const CertificateReport r = tanh_contraction_certificate(W, 0.5, 100000, 2);
  MESSAGE("violations " << r.violations << " worst margin " << r.worst_margin << " |P| " << r.P_norm
                        << " 1/(2 beta0) " << 1 / (2 * r.beta0));
  CHECK(r.passed());
}
