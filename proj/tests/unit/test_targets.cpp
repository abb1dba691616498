#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "memlab/core.hpp"
#include "memlab/linalg.hpp"
#include "memlab/targets.hpp"

using namespace memlab;

namespace {

Signal heaviside(const TimeGrid& g, Scalar a = 1.0) {
  return make_probe_signal(ProbeKind::Heaviside, Vector::Constant(1, a), g);
}

Signal random_signal(std::uint64_t seed, const TimeGrid& g) {
  Rng rng(seed);
  return Signal(g, gaussian_matrix(rng, 1, static_cast<Eigen::Index>(g.size())));
}

}  // namespace

TEST_CASE("kernel values at the origin") {
  CHECK(MemoryKernel::exp_decay(0.9).profile(0) == 1.0);
  CHECK(MemoryKernel::poly_decay(1.1).profile(0) == 1.0);
  CHECK(MemoryKernel::poly_decay(1.5).profile(3) == doctest::Approx(std::pow(4.0, -1.5)).epsilon(1e-15));
  CHECK(MemoryKernel::exp_decay(0.9).profile(-1) == 0.0);
}

TEST_CASE("kernel parameter domain") {
  CHECK_THROWS_AS(MemoryKernel::exp_decay(1.0), DomainError);
  CHECK_THROWS_AS(MemoryKernel::exp_decay(0.0), DomainError);
  CHECK_THROWS_AS(MemoryKernel::poly_decay(1.0), DomainError);
  CHECK_THROWS_AS(MemoryKernel::poly_decay(0.5), DomainError);
}

TEST_CASE("kernel integrals against composite Simpson quadrature") {
  auto simpson = [](const MemoryKernel& k, Scalar a, Scalar b, int n) {
    const Scalar h = (b - a) / n;
    Scalar s = k.profile(a) + k.profile(b);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4 : 2) * k.profile(a + i * h);
    return s * h / 3;
  };
  const MemoryKernel e = MemoryKernel::exp_decay(0.9);
  CHECK(std::abs(simpson(e, 0, 400, 40000) + e.tail_integral(400) - 1 / std::log(1 / 0.9)) <= 1e-6);
  CHECK(e.total_integral() == doctest::Approx(1 / std::log(1 / 0.9)).epsilon(1e-14));
  for (Scalar p : {1.1, 1.5}) {
    const MemoryKernel k = MemoryKernel::poly_decay(p);
    CHECK(std::abs(simpson(k, 0, 50, 50000) - k.profile_integral(50)) <= 1e-8);
    CHECK(k.total_integral() == doctest::Approx(1 / (p - 1)));
    CHECK(k.profile_integral(50) + k.tail_integral(50) == doctest::Approx(k.total_integral()));
  }
}

TEST_CASE("tabulated kernels") {
  const MemoryKernel k = MemoryKernel::tabulated({0, 1, 2}, {1, 0.5, 0.25});
  CHECK(k.profile(0.5) == doctest::Approx(0.75));
  CHECK(k.profile(2.5) == 0.0);
  CHECK(k.profile_integral(2) == doctest::Approx(0.75 + 0.375));
  CHECK(k.total_integral() == doctest::Approx(1.125));

  const std::string path = "memlab_kernel_test.csv";
  {
    std::ofstream f(path);
    f << "t,rho\n0,1\n1,0.5\n2,0.25\n";
  }
  const MemoryKernel l = MemoryKernel::load_csv(path);
  std::remove(path.c_str());
  CHECK(l.profile(1.5) == doctest::Approx(0.375));
  CHECK_THROWS_AS(MemoryKernel::load_csv("/nonexistent/kernel.csv"), IoError);
}

TEST_CASE("zero input gives zero output") {
  const TimeGrid g(0, 10, 0.1);
  const Signal zero(g, Matrix::Zero(1, static_cast<Eigen::Index>(g.size())));
  for (const auto& t : {make_linear_target(MemoryKernel::exp_decay(0.9)),
                        make_nonlinear_target(MemoryKernel::poly_decay(1.5))}) {
    const FunctionalOutput o = t(zero, g);
    CHECK(o.y.cwiseAbs().maxCoeff() == 0.0);
    CHECK(o.dy.cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("Heaviside response of the exponential kernel") {
  const MemoryKernel k = MemoryKernel::exp_decay(0.9);
  const TimeGrid g(0, 50, 0.01);
  const FunctionalOutput o = eval_linear_functional(k, heaviside(g), g);
  const Scalar r = std::log(1 / 0.9);
  Scalar wy = 0, wd = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    wy = std::max(wy, std::abs(o.y(ii) - (1 - std::pow(0.9, g[i])) / r));
    wd = std::max(wd, std::abs(o.dy(ii) - std::pow(0.9, g[i])));
  }
  CHECK(wy <= 1e-6);
  CHECK(wd <= 1e-12);
}

TEST_CASE("linear functionals are linear and time homogeneous") {
  const MemoryKernel k = MemoryKernel::poly_decay(1.1);
  const TimeGrid g(0, 20, 0.1);
  const Signal a = random_signal(1, g), b = random_signal(2, g);
  const Scalar la = 0.7, lb = -1.3;
  const Signal mix(g, la * a.values + lb * b.values);
  const FunctionalOutput oa = eval_linear_functional(k, a, g), ob = eval_linear_functional(k, b, g),
                         om = eval_linear_functional(k, mix, g);
  CHECK((om.y - la * oa.y - lb * ob.y).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK((om.dy - la * oa.dy - lb * ob.dy).cwiseAbs().maxCoeff() <= 1e-10);

  const Eigen::Index shift = 13, n = static_cast<Eigen::Index>(g.size());
  const TimeGrid gs = TimeGrid::from_count(0, 0.1, g.size() + shift);
  Matrix vs = Matrix::Zero(1, n + shift);
  vs.rightCols(n) = a.values;
  const FunctionalOutput os = eval_linear_functional(k, Signal(gs, vs), gs);
  CHECK((os.y.tail(n) - oa.y).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(os.y.head(shift).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("dy is consistent with a finite difference of y") {
  const TimeGrid g(0, 20, 1e-3);
  for (const auto& t : {make_linear_target(MemoryKernel::poly_decay(1.5)),
                        make_nonlinear_target(MemoryKernel::exp_decay(0.9))}) {
    const FunctionalOutput o = t(heaviside(g, 1.0), g);
    Scalar worst = 0;
    for (Eigen::Index i = 1; i + 1 < o.y.size(); ++i)
      worst = std::max(worst, std::abs((o.y(i + 1) - o.y(i - 1)) / (2 * g.dt()) - o.dy(i)));
    CHECK(worst <= 1e-5);
  }
}

TEST_CASE("impulse response converges to the kernel at first order") {
  const MemoryKernel k = MemoryKernel::exp_decay(0.9);
  std::vector<Scalar> errs;
  for (Scalar dt : {0.1, 0.05, 0.025}) {
    const TimeGrid g(0, 10, dt);
    const Signal x = make_probe_signal(ProbeKind::Impulse, Vector::Ones(1), g);
    const FunctionalOutput o = eval_linear_functional(k, x, g);
    Scalar worst = 0;
    for (std::size_t i = 1; i < g.size(); ++i)
      worst = std::max(worst, std::abs(o.y(static_cast<Eigen::Index>(i)) - k.profile(g[i])));
    errs.push_back(worst);
  }
  CHECK(errs[0] / errs[1] == doctest::Approx(2.0).epsilon(0.05));
  CHECK(errs[1] / errs[2] == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("tanh target follows the chain rule and the linear Taylor term") {
  const MemoryKernel k = MemoryKernel::exp_decay(0.9);
  const TimeGrid g(0, 30, 0.01);
  const FunctionalOutput o = make_nonlinear_target(k)(heaviside(g), g);
  for (std::size_t i = 0; i < g.size(); i += 97) {
    const Scalar lin = k.profile_integral(g[i]);
    const Scalar sech2 = 1 - std::tanh(lin) * std::tanh(lin);
    CHECK(o.dy(static_cast<Eigen::Index>(i)) == doctest::Approx(k.profile(g[i]) * sech2).epsilon(1e-12));
  }
  // tanh(eps L) - eps L = O(eps^3): shrinking eps by 2 shrinks the gap by 8.
  std::vector<Scalar> gaps;
  for (Scalar eps : {0.01, 0.005, 0.0025}) {
    const FunctionalOutput n = make_nonlinear_target(k)(heaviside(g, eps), g);
    const FunctionalOutput l = eval_linear_functional(k, heaviside(g, eps), g);
    gaps.push_back((n.y - l.y).cwiseAbs().maxCoeff());
  }
  CHECK(gaps[0] / gaps[1] == doctest::Approx(8.0).epsilon(0.05));
  CHECK(gaps[1] / gaps[2] == doctest::Approx(8.0).epsilon(0.05));
}

TEST_CASE("teachers are deterministic with exact abscissa") {
  TeacherSpectrum s;
  s.abscissa = -0.5;
  const RnnParams a = draw_teacher_params(42, 16, 1, s);
  const RnnParams b = draw_teacher_params(42, 16, 1, s);
  CHECK(a.W() == b.W());
  CHECK(a.U == b.U);
  CHECK(a.c == b.c);
  CHECK(a.b.cwiseAbs().maxCoeff() == 0.0);
  CHECK(std::abs(spectral_abscissa(a.W()).abscissa + 0.5) <= 1e-8);
  const RnnParams c = draw_teacher_params(43, 16, 1, s);
  CHECK(c.W() != a.W());

  Rng rng(3);
  const Matrix S = gaussian_matrix(rng, 10, 10);
  CHECK(std::abs(spectral_abscissa(shift_to_abscissa(S, -2.0)).abscissa + 2.0) <= 1e-8);
}

TEST_CASE("teacher on zero input stays at zero") {
  TeacherSpectrum s;
  s.abscissa = -0.5;
  const FunctionalTarget t = make_teacher_rnn(7, 16, s, Activation::tanh());
  const TimeGrid g(0, 5, 0.01);
  const Signal zero(g, Matrix::Zero(1, static_cast<Eigen::Index>(g.size())));
  const FunctionalOutput o = t(zero, g);
  CHECK(o.y.cwiseAbs().maxCoeff() == 0.0);
  CHECK(t.descriptor() == TargetDescriptor::TeacherRnn);
  REQUIRE(t.rnn_params() != nullptr);
  CHECK(t.rnn_params()->m() == 16);
}

TEST_CASE("refine_signal repeats held values") {
  const TimeGrid g(0, 1, 0.1);
  const Signal x = random_signal(5, g);
  const Signal r = refine_signal(x, 4);
  CHECK(r.grid.dt() == doctest::Approx(0.025));
  for (std::size_t k = 0; k + 1 < g.size(); ++k)
    for (std::size_t j = 0; j < 4; ++j) CHECK(r.at(4 * k + j)(0) == x.at(k)(0));
  // A refined signal has the same linear response.
  const MemoryKernel kern = MemoryKernel::exp_decay(0.8);
  const FunctionalOutput a = eval_linear_functional(kern, x, g), b = eval_linear_functional(kern, r, g);
  CHECK((a.y - b.y).cwiseAbs().maxCoeff() <= 1e-12);
}
