#pragma once

#include <cstdint>
#include <string>

#include "memlab/core/activation.hpp"
#include "memlab/core/params.hpp"
#include "memlab/core/time_grid.hpp"

namespace memlab {

struct GridSpec {
  Scalar t_start = 0.1;
  Scalar t_end = 3.2;
  Scalar dt = 0.1;
  TimeGrid grid() const { return TimeGrid(t_start, t_end, dt); }
};

struct TrainConfig {
  GridSpec train_grid{0.1, 3.2, 0.1};
  GridSpec eval_grid{0.1, 10.0, 0.1};
  std::size_t n_train = 12800;
  std::size_t n_test = 12800;
  std::size_t batch = 128;
  Scalar lr = 0.005;
  std::size_t max_epochs = 1000;
  Scalar stop_loss = 1e-8;
  std::uint64_t seed = 0;
  std::string activation = "tanh";
  ReparamKind reparam = ReparamKind::Direct;
  std::size_t m = 8;
  std::size_t d = 1;
  /// Std. dev. of the per-step Gaussian training inputs.
  Scalar input_scale = 1.0;
  /// Random piecewise-constant probes (beyond the Heaviside grid) used for
  /// the eval-grid Sobolev error; 0 with no amplitudes disables it.
  std::size_t eval_random_probes = 4;
  bool compute_eval_error = true;

  Activation act() const { return Activation::from_string(activation); }
  void validate() const;
};

/// JSON text <-> TrainConfig. Unknown keys are rejected; missing keys keep
/// their defaults. Throws ConfigError.
TrainConfig train_config_from_json(const std::string& text);
std::string train_config_to_json(const TrainConfig& cfg);
TrainConfig load_train_config(const std::string& path);

}  // namespace memlab
