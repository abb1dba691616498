#include "memlab/train/dataset.hpp"

#include <cmath>

#include "memlab/core/errors.hpp"
#include "memlab/core/random.hpp"

namespace memlab {

Signal Dataset::signal(std::size_t i) const {
  const auto di = static_cast<Eigen::Index>(d);
  const auto n = static_cast<Eigen::Index>(input_grid.size());
  Matrix v(di, n);
  for (Eigen::Index k = 0; k < n; ++k) v.col(k) = X.col(static_cast<Eigen::Index>(i)).segment(k * di, di);
  return Signal(input_grid, std::move(v), SignalKind::Arbitrary);
}

Dataset make_split(const FunctionalTarget& target, const TrainConfig& cfg, std::size_t n, std::uint64_t stream) {
  if (target.input_dim() != cfg.d) throw DomainError("make_dataset: target and config input dimensions differ");
  const TimeGrid out_grid = cfg.train_grid.grid();
  const Scalar dt = out_grid.dt();
  const auto offset = static_cast<std::size_t>(std::llround(out_grid.t_start() / dt));
  Dataset ds{TimeGrid::from_count(0.0, dt, offset + out_grid.size()), offset, cfg.d, {}, {}};

  const auto di = static_cast<Eigen::Index>(cfg.d);
  const auto n_in = static_cast<Eigen::Index>(ds.input_grid.size());
  ds.X.resize(n_in * di, static_cast<Eigen::Index>(n));
  ds.Y.resize(static_cast<Eigen::Index>(out_grid.size()), static_cast<Eigen::Index>(n));
  Rng rng(derive_seed(cfg.seed, {0xda7aULL, stream}));
  std::normal_distribution<Scalar> normal(0.0, 1.0);
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i) {
    for (Eigen::Index k = 0; k + 1 < n_in; ++k)
      for (Eigen::Index j = 0; j < di; ++j) ds.X(k * di + j, i) = cfg.input_scale * normal(rng);
    // The last sample only matters after the final output; hold the previous value.
    ds.X.col(i).segment((n_in - 1) * di, di) = ds.X.col(i).segment((n_in - 2) * di, di);
  }
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i) {
    const FunctionalOutput out = target(ds.signal(static_cast<std::size_t>(i)), out_grid);
    if (!out.y.allFinite()) throw NumericFailure("make_dataset: target output is not finite");
    ds.Y.col(i) = out.y;
  }
  return ds;
}

TrainingData make_dataset(const FunctionalTarget& target, const TrainConfig& cfg) {
  cfg.validate();
  return TrainingData{make_split(target, cfg, cfg.n_train, 1), make_split(target, cfg, cfg.n_test, 2)};
}

}  // namespace memlab
