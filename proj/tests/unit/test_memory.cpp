#include <doctest.h>

#include <cmath>

#include "memlab/core.hpp"
#include "memlab/linalg.hpp"
#include "memlab/memory.hpp"
#include "memlab/targets.hpp"

using namespace memlab;

namespace {

MemoryCurve synthetic(const TimeGrid& g, const std::function<Scalar(Scalar)>& f) {
  Vector v(static_cast<Eigen::Index>(g.size()));
  for (std::size_t k = 0; k < g.size(); ++k) v(static_cast<Eigen::Index>(k)) = f(g[k]);
  return MemoryCurve(g, v, ProbeKind::Heaviside, {Vector::Ones(1)});
}

RnnParams teacher(std::uint64_t seed, std::size_t m, Scalar a) {
  TeacherSpectrum s;
  s.abscissa = a;
  return draw_teacher_params(seed, m, 1, s);
}

}  // namespace

TEST_CASE("linear functional curve equals |rho|") {
  const TimeGrid g(0, 40, 0.01);
  const MemoryKernel k = MemoryKernel::exp_decay(0.9);
  const MemoryCurve c = probe_memory(make_linear_target(k), ProbeKind::Heaviside, default_amplitudes(), g);
  Scalar worst = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    worst = std::max(worst, std::abs(c.values(static_cast<Eigen::Index>(i)) - std::pow(0.9, g[i])));
  CHECK(worst <= 1e-4);

  const MemoryKernel kp = MemoryKernel::poly_decay(1.5);
  const MemoryCurve cp = probe_memory(make_linear_target(kp), ProbeKind::Heaviside, default_amplitudes(), g);
  for (std::size_t i = 0; i < g.size(); i += 101)
    CHECK(std::abs(cp.values(static_cast<Eigen::Index>(i)) - kp.profile(g[i])) <= 1e-4);
}

TEST_CASE("linear RNN curve equals |c' e^{Wt} U|") {
  const RnnParams p = teacher(11, 6, -0.4);
  const TimeGrid g(0, 20, 0.01);
  const MemoryCurve c = probe_memory(make_rnn_target(p, Activation::linear()), ProbeKind::Heaviside, {Vector::Ones(1)}, g);
  Scalar worst = 0;
  for (std::size_t i = 0; i < g.size(); i += 10) {
    const Scalar ref = std::abs((p.c.transpose() * expm(p.W(), g[i]) * p.U)(0, 0));
    worst = std::max(worst, std::abs(c.values(static_cast<Eigen::Index>(i)) - ref));
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("zero functional and amplitude errors") {
  const TimeGrid g(0, 5, 0.1);
  const FunctionalTarget zero(TargetDescriptor::LinearKernel, 1, [](const Signal&, const TimeGrid& q) {
    const auto n = static_cast<Eigen::Index>(q.size());
    return FunctionalOutput{Vector::Zero(n), Vector::Zero(n)};
  });
  const MemoryCurve c = probe_memory(zero, ProbeKind::Heaviside, default_amplitudes(), g);
  CHECK(c.values.cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(probe_memory(zero, ProbeKind::Heaviside, {}, g), DomainError);
  CHECK_THROWS_AS(probe_memory(zero, ProbeKind::Heaviside, {Vector::Zero(1)}, g), DomainError);
}

TEST_CASE("normalizations") {
  const TimeGrid g(0, 5, 0.1);
  const FunctionalTarget t = make_linear_target(MemoryKernel::exp_decay(0.5));
  const MemoryCurve a = probe_memory(t, ProbeKind::Heaviside, {Vector::Constant(1, 2.0)}, g, Normalization::InfNorm);
  const MemoryCurve b =
      probe_memory(t, ProbeKind::Heaviside, {Vector::Constant(1, 2.0)}, g, Normalization::InfNormPlusOne);
  CHECK((3.0 * b.values - 2.0 * a.values).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK(b.normalization == Normalization::InfNormPlusOne);
}

TEST_CASE("classification of synthetic curves") {
  const TimeGrid g(0, 100, 0.1);
  const DecayClass e = classify_decay(synthetic(g, [](Scalar t) { return std::exp(-0.5 * t); }));
  CHECK(e.tag == DecayTag::Exponential);
  CHECK(e.rate == doctest::Approx(0.5).epsilon(0.04));
  CHECK(e.r2_exp > e.r2_poly);

  const DecayClass p = classify_decay(synthetic(g, [](Scalar t) { return std::pow(t + 1, -1.5); }));
  CHECK(p.tag == DecayTag::Polynomial);
  CHECK(std::abs(p.rate - 1.5) <= 0.05);

  const DecayClass n = classify_decay(synthetic(g, [](Scalar) { return 1.0; }));
  CHECK(n.tag == DecayTag::NonDecaying);

  const DecayClass z = classify_decay(synthetic(g, [](Scalar) { return 0.0; }));
  CHECK(z.below_noise);
  CHECK(z.tag == DecayTag::Exponential);
  CHECK(std::isinf(z.rate));
}

TEST_CASE("family sup curve") {
  const TimeGrid g(0, 10, 0.1);
  const MemoryCurve a = synthetic(g, [](Scalar t) { return std::exp(-t); });
  const MemoryCurve b = synthetic(g, [](Scalar t) { return std::exp(-2 * t); });
  CHECK(family_sup_curve({a}).values == a.values);
  CHECK(family_sup_curve({a, b}).values == a.values);

  Rng rng(9);
  std::vector<MemoryCurve> set;
  for (int i = 0; i < 6; ++i) {
    const Vector v = gaussian_vector(rng, static_cast<Eigen::Index>(g.size())).cwiseAbs();
    set.emplace_back(g, v, ProbeKind::Heaviside, std::vector<Vector>{Vector::Ones(1)});
  }
  const MemoryCurve s = family_sup_curve(set);
  for (const auto& c : set) CHECK(((s.values - c.values).array() >= 0).all());

  const MemoryCurve other = synthetic(TimeGrid(0, 10, 0.2), [](Scalar) { return 1.0; });
  CHECK_THROWS_AS(family_sup_curve({a, other}), DomainError);
}

TEST_CASE("Heaviside and impulse probes agree for linear systems") {
  const TimeGrid g(0, 20, 0.01);
  const FunctionalTarget lin = make_linear_target(MemoryKernel::exp_decay(0.9));
  const MemoryCurve h = probe_memory(lin, ProbeKind::Heaviside, default_amplitudes(), g);
  const MemoryCurve i = probe_memory(lin, ProbeKind::Impulse, default_amplitudes(), g);
  // The impulse curve is an average of rho over one step, an O(dt) gap.
  const Eigen::Index n = h.values.size();
  CHECK((h.values.tail(n - 1) - i.values.tail(n - 1)).cwiseAbs().maxCoeff() <= g.dt());

  const RnnParams p = teacher(12, 6, -0.5);
  const FunctionalTarget rnn = make_rnn_target(p, Activation::linear());
  const MemoryCurve hr = probe_memory(rnn, ProbeKind::Heaviside, default_amplitudes(), g);
  const MemoryCurve ir = probe_memory(rnn, ProbeKind::Impulse, default_amplitudes(), g);
  CHECK((hr.values.tail(n - 1) - ir.values.tail(n - 1)).cwiseAbs().maxCoeff() <=
        2 * g.dt() * hr.values.maxCoeff() * p.W().norm());
}

TEST_CASE("tanh teachers classify alike under Heaviside and impulse probes") {
  const TimeGrid g(0, 40, 0.01);
  const FunctionalTarget t = make_rnn_target(teacher(13, 8, -0.5), Activation::tanh());
  const DecayClass h = classify_decay(probe_memory(t, ProbeKind::Heaviside, default_amplitudes(), g));
  const DecayClass i = classify_decay(probe_memory(t, ProbeKind::Impulse, default_amplitudes(), g));
  CHECK(h.tag == i.tag);
  if (h.tag == DecayTag::Exponential && i.tag == DecayTag::Exponential)
    CHECK(std::abs(h.rate - i.rate) <= 0.2 * h.rate);
}

TEST_CASE("reversed probe of a linear functional") {
  // Input x on [-T, 0) gives dy_t = x (rho(t + T) - rho(t)); the pre-period T is the horizon.
  const TimeGrid g(0, 20, 0.01);
  const MemoryKernel k = MemoryKernel::exp_decay(0.7);
  const MemoryCurve c = probe_memory(make_linear_target(k), ProbeKind::Reversed, default_amplitudes(), g);
  for (std::size_t i = 0; i < g.size(); i += 50) {
    const Scalar exact = k.profile(g[i]) - k.profile(g[i] + 20);
    CHECK(std::abs(c.values(static_cast<Eigen::Index>(i)) - exact) <= 1e-12);
  }
}

TEST_CASE("scale robustness and amplitude monotonicity") {
  const TimeGrid g(0, 40, 0.05);
  const FunctionalTarget lin = make_linear_target(MemoryKernel::poly_decay(1.5));
  std::vector<Vector> amps = default_amplitudes(), doubled;
  for (const auto& a : amps) doubled.push_back(2 * a);
  const MemoryCurve a = probe_memory(lin, ProbeKind::Heaviside, amps, g);
  const MemoryCurve b = probe_memory(lin, ProbeKind::Heaviside, doubled, g);
  CHECK((a.values - b.values).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(classify_decay(a).tag == classify_decay(b).tag);

  const FunctionalTarget non = make_nonlinear_target(MemoryKernel::exp_decay(0.9));
  const MemoryCurve n1 = probe_memory(non, ProbeKind::Heaviside, {Vector::Constant(1, 0.1)}, g);
  const MemoryCurve n2 = probe_memory(non, ProbeKind::Heaviside, {Vector::Constant(1, 0.2)}, g);
  CHECK(classify_decay(n1).tag == classify_decay(n2).tag);

  const FunctionalTarget rnn = make_rnn_target(teacher(14, 6, -0.3), Activation::tanh());
  const MemoryCurve few = probe_memory(rnn, ProbeKind::Heaviside, {Vector::Constant(1, 0.5)}, g);
  const MemoryCurve more = probe_memory(rnn, ProbeKind::Heaviside, default_amplitudes(), g);
  CHECK(((more.values - few.values).array() >= 0).all());
}
