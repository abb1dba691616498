#pragma once

#include <cstdint>

#include "memlab/core/signal.hpp"
#include "memlab/targets/functional.hpp"
#include "memlab/train/config.hpp"

namespace memlab {

/// Column-per-sample training data. Inputs are held on `input_grid`
/// (t = 0, dt, ..., T); targets are the functional's outputs on the output
/// grid, which is the tail of the input grid starting at `output_offset`.
struct Dataset {
  TimeGrid input_grid;
  std::size_t output_offset = 0;
  std::size_t d = 1;
  Matrix X;  // (n_input_steps * d) x n
  Matrix Y;  // n_outputs x n

  std::size_t size() const noexcept { return static_cast<std::size_t>(X.cols()); }
  std::size_t n_outputs() const noexcept { return static_cast<std::size_t>(Y.rows()); }
  Signal signal(std::size_t i) const;
};

struct TrainingData {
  Dataset train;
  Dataset test;
};

/// Inputs are per-step standard normal values held over each step (scaled by
/// cfg.input_scale); train and test are drawn from independent streams.
TrainingData make_dataset(const FunctionalTarget& target, const TrainConfig& cfg);
Dataset make_split(const FunctionalTarget& target, const TrainConfig& cfg, std::size_t n, std::uint64_t stream);

}  // namespace memlab
