#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "memlab/core.hpp"
#include "memlab/targets.hpp"
#include "memlab/train.hpp"

namespace memlab::testing {

struct GradCheck {
  Scalar max_rel_error = 0;
  std::size_t coordinates = 0;
  std::string worst;  // parameter block of the worst coordinate
};

/// Random small problem: m hidden units, `steps` Euler steps, a handful of
/// samples with targets from a random linear kernel.
struct GradProblem {
  RnnParams theta;
  Activation act;
  TrainingData data;
};

inline GradProblem random_grad_problem(std::uint64_t seed, const std::string& activation, ReparamKind kind,
                                       std::size_t m = 3, std::size_t steps = 8, std::size_t samples = 6) {
  TrainConfig cfg;
  cfg.m = m;
  cfg.seed = seed;
  cfg.reparam = kind;
  cfg.activation = activation;
  cfg.train_grid = {0.1, 0.1 * static_cast<Scalar>(steps), 0.1};
  cfg.n_train = samples;
  cfg.n_test = 1;
  cfg.batch = samples;
  const FunctionalTarget target = make_linear_target(MemoryKernel::exp_decay(0.7));
  GradProblem p{init_params(cfg), cfg.act(), make_dataset(target, cfg)};
  // Move away from the initialization's symmetric points (b = 0, M constant).
  Rng rng(derive_seed(seed, {0x6c, m}));
  p.theta.b = gaussian_vector(rng, static_cast<Eigen::Index>(m), 0.3);
  if (p.theta.is_reparameterized()) p.theta.set_M(p.theta.M() + gaussian_vector(rng, static_cast<Eigen::Index>(m), 0.5));
  return p;
}

/// Central differences with step h on every flat coordinate.
inline GradCheck check_gradients(const GradProblem& p, Scalar h = 1e-5) {
  const BatchView batch = BatchView::all(p.data.train);
  const Gradients g = bptt_grad(p.theta, p.act, batch);
  const Vector analytic = pack_gradients(g, p.theta);
  const Vector flat = pack_params(p.theta);
  const auto m = static_cast<Eigen::Index>(p.theta.m()), d = static_cast<Eigen::Index>(p.theta.d());
  const Eigen::Index nW = p.theta.is_reparameterized() ? m : m * m;
  GradCheck out;
  RnnParams probe = p.theta;
  for (Eigen::Index i = 0; i < flat.size(); ++i) {
    Vector a = flat, b = flat;
    a(i) += h;
    b(i) -= h;
    unpack_params(a, probe);
    const Scalar la = mse_loss(probe, p.act, batch);
    unpack_params(b, probe);
    const Scalar lb = mse_loss(probe, p.act, batch);
    const Scalar fd = (la - lb) / (2 * h);
    const Scalar rel = std::abs(fd - analytic(i)) / std::max({std::abs(fd), std::abs(analytic(i)), 1e-6});
    if (rel > out.max_rel_error) {
      out.max_rel_error = rel;
      out.worst = i < nW ? "W" : i < nW + m * d ? "U" : i < nW + m * d + m ? "b" : "c";
    }
    ++out.coordinates;
  }
  return out;
}

}  // namespace memlab::testing
