#include "memlab/train/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "memlab/approx/error_measures.hpp"
#include "memlab/core/random.hpp"
#include "memlab/memory/probe.hpp"
#include "memlab/train/adam.hpp"
#include "memlab/train/bptt.hpp"

namespace memlab {

std::optional<std::size_t> TrainResult::first_epoch_below(Scalar threshold) const {
  for (const auto& r : history)
    if (r.val_loss <= threshold) return r.epoch;
  return std::nullopt;
}

RnnParams init_params(const TrainConfig& cfg) {
  Rng rng(derive_seed(cfg.seed, {0x1417ULL, cfg.m}));
  const auto m = static_cast<Eigen::Index>(cfg.m);
  const auto d = static_cast<Eigen::Index>(cfg.d);
  const Scalar s = 1.0 / std::sqrt(static_cast<Scalar>(cfg.m));
  if (cfg.reparam == ReparamKind::Direct) {
    Matrix W = gaussian_matrix(rng, m, m, s);
    Matrix U = gaussian_matrix(rng, m, d, s);
    Vector c = gaussian_vector(rng, m, s);
    return RnnParams(std::move(W), std::move(U), Vector::Zero(m), std::move(c));
  }
  Matrix U = gaussian_matrix(rng, m, d, s);
  Vector c = gaussian_vector(rng, m, s);
  const Vector M = Vector::Constant(m, reparam_inverse(cfg.reparam, -1.0));
  return RnnParams::reparameterized(cfg.reparam, M, std::move(U), Vector::Zero(m), std::move(c));
}

FunctionalTarget student_functional(const RnnParams& theta, const TrainConfig& cfg) {
  return make_rnn_target(theta, cfg.act(), Integrator::Euler);
}

Scalar student_eval_error(const FunctionalTarget& target, const RnnParams& theta, const TrainConfig& cfg) {
  const ProbeSet probes =
      make_probe_set(default_amplitudes(cfg.d), cfg.eval_random_probes, cfg.eval_grid.grid(), cfg.seed);
  return sobolev_error(target, student_functional(theta, cfg), probes);
}

namespace {

void permute_columns(Dataset& ds, const std::vector<Eigen::Index>& perm) {
  Matrix X(ds.X.rows(), ds.X.cols());
  Matrix Y(ds.Y.rows(), ds.Y.cols());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    X.col(static_cast<Eigen::Index>(i)) = ds.X.col(perm[i]);
    Y.col(static_cast<Eigen::Index>(i)) = ds.Y.col(perm[i]);
  }
  ds.X = std::move(X);
  ds.Y = std::move(Y);
}

}  // namespace

TrainResult train_rnn(const TrainingData& data, const FunctionalTarget& target, const TrainConfig& cfg, RnnParams init,
                      const std::function<bool(const EpochRecord&)>& on_epoch) {
  cfg.validate();
  const Activation act = cfg.act();
  const BatchView val = BatchView::all(data.test);

  TrainResult result;
  result.params = std::move(init);
  result.eval_error = std::numeric_limits<Scalar>::quiet_NaN();
  Vector flat = pack_params(result.params);
  Adam adam(cfg.lr);

  std::vector<Eigen::Index> order(data.train.size());
  for (std::size_t epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    Rng rng(derive_seed(cfg.seed, {0x5b0ffULL, epoch}));
    std::shuffle(order.begin(), order.end(), rng);
    Dataset shuffled = data.train;
    permute_columns(shuffled, order);

    Scalar loss_sum = 0;
    std::size_t batches = 0;
    for (std::size_t first = 0; first < shuffled.size(); first += cfg.batch) {
      const BatchView b{&shuffled, first, std::min(cfg.batch, shuffled.size() - first)};
      try {
        const Gradients g = bptt_grad(result.params, act, b);
        loss_sum += g.loss;
        ++batches;
        Vector next = flat;
        adam.step(next, pack_gradients(g, result.params));
        if (!next.allFinite()) throw DivergenceError("adam produced non-finite weights", first);
        flat = std::move(next);
        unpack_params(flat, result.params);
      } catch (const DivergenceError& e) {
        // The sample index in e refers to the shuffled order; map it back.
        const std::size_t idx = e.index() < order.size() ? static_cast<std::size_t>(order[e.index()]) : e.index();
        throw TrainingDiverged(DivergenceError(e.what(), idx), result.params, result.history);
      }
    }
    EpochRecord rec;
    rec.epoch = epoch;
    rec.train_loss = loss_sum / static_cast<Scalar>(std::max<std::size_t>(1, batches));
    try {
      rec.val_loss = mse_loss(result.params, act, val);
    } catch (const DivergenceError& e) {
      throw TrainingDiverged(e, result.params, result.history);
    }
    result.history.push_back(rec);
    if (rec.val_loss <= cfg.stop_loss) {
      result.converged = true;
      break;
    }
    if (on_epoch && !on_epoch(rec)) break;
  }
  if (cfg.compute_eval_error) result.eval_error = student_eval_error(target, result.params, cfg);
  return result;
}

TrainResult train_rnn(const FunctionalTarget& target, const TrainConfig& cfg,
                      const std::function<bool(const EpochRecord&)>& on_epoch) {
  const TrainingData data = make_dataset(target, cfg);
  return train_rnn(data, target, cfg, init_params(cfg), on_epoch);
}

}  // namespace memlab
