#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "memlab/core/errors.hpp"
#include "memlab/core/params.hpp"
#include "memlab/targets/functional.hpp"
#include "memlab/train/config.hpp"
#include "memlab/train/dataset.hpp"

namespace memlab {

struct EpochRecord {
  std::size_t epoch = 0;
  Scalar train_loss = 0;
  Scalar val_loss = 0;
};

struct TrainResult {
  RnnParams params;
  std::vector<EpochRecord> history;
  Scalar eval_error = 0;  // Sobolev estimate on the eval grid (NaN when disabled)
  bool converged = false;

  /// First epoch whose validation loss is <= threshold.
  std::optional<std::size_t> first_epoch_below(Scalar threshold) const;
  Scalar final_val_loss() const { return history.empty() ? 0 : history.back().val_loss; }
};

/// Raised when training diverges; carries the last finite weights.
class TrainingDiverged : public DivergenceError {
 public:
  TrainingDiverged(const DivergenceError& cause, RnnParams checkpoint, std::vector<EpochRecord> history)
      : DivergenceError(std::string("training diverged: ") + cause.what(), cause.index()),
        checkpoint(std::move(checkpoint)),
        history(std::move(history)) {}
  RnnParams checkpoint;
  std::vector<EpochRecord> history;
};

/// W, U, c ~ N(0, 1/m) (W only for Direct), b = 0, and M with g(M) = -1.
RnnParams init_params(const TrainConfig& cfg);

/// The trained student as a functional: Euler at the dataset step.
FunctionalTarget student_functional(const RnnParams& theta, const TrainConfig& cfg);

/// Adam over shuffled minibatches; stops once the validation loss reaches
/// cfg.stop_loss. `on_epoch` may return false to stop early.
TrainResult train_rnn(const FunctionalTarget& target, const TrainConfig& cfg,
                      const std::function<bool(const EpochRecord&)>& on_epoch = {});
TrainResult train_rnn(const TrainingData& data, const FunctionalTarget& target, const TrainConfig& cfg,
                      RnnParams init, const std::function<bool(const EpochRecord&)>& on_epoch = {});

/// Sobolev error of a student against the target on the eval grid.
Scalar student_eval_error(const FunctionalTarget& target, const RnnParams& theta, const TrainConfig& cfg);

}  // namespace memlab
