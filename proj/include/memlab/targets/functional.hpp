#pragma once

#include <functional>
#include <memory>
#include <string>

#include "memlab/core/activation.hpp"
#include "memlab/core/params.hpp"
#include "memlab/core/signal.hpp"
#include "memlab/dynamics/gru.hpp"
#include "memlab/targets/kernel.hpp"

namespace memlab {

struct FunctionalOutput {
  Vector y;
  Vector dy;
};

enum class TargetDescriptor { LinearKernel, TanhOfLinear, TeacherRnn, TeacherGru, RnnModel, GruModel };

const char* to_string(TargetDescriptor d) noexcept;

enum class Integrator { RK4, Euler };

/// Type-erased functional sequence H: a deterministic map from an input
/// signal to (y, dy) sampled on a query grid.
class FunctionalTarget {
 public:
  using Evaluator = std::function<FunctionalOutput(const Signal&, const TimeGrid&)>;

  FunctionalTarget(TargetDescriptor descriptor, std::size_t input_dim, Evaluator eval, std::string note = {});

  FunctionalOutput operator()(const Signal& x, const TimeGrid& grid) const { return eval_(x, grid); }

  TargetDescriptor descriptor() const noexcept { return descriptor_; }
  std::size_t input_dim() const noexcept { return dim_; }
  const std::string& note() const noexcept { return note_; }

  /// Weights behind an RNN-backed functional, if any.
  const RnnParams* rnn_params() const noexcept { return rnn_.get(); }
  const GruParams* gru_params() const noexcept { return gru_.get(); }

 private:
  friend FunctionalTarget make_rnn_target(RnnParams, Activation, Integrator, std::size_t, TargetDescriptor);
  friend FunctionalTarget make_gru_target(GruParams, std::size_t, TargetDescriptor);

  TargetDescriptor descriptor_;
  std::size_t dim_;
  Evaluator eval_;
  std::string note_;
  std::shared_ptr<const RnnParams> rnn_;
  std::shared_ptr<const GruParams> gru_;
};

/// y_t = int_0^inf rho(s)' x_{t-s} ds for a zero-order-hold input that is zero
/// before its grid. Evaluated exactly through the jump decomposition
/// y_t = sum_j dx_j' R(t - tau_j), dy_t = sum_j dx_j' rho(t - tau_j).
FunctionalOutput eval_linear_functional(const MemoryKernel& rho, const Signal& x, const TimeGrid& grid);

FunctionalTarget make_linear_target(const MemoryKernel& rho);

/// H_t(x) = tanh(int rho(s)' x_{t-s} ds).
FunctionalTarget make_nonlinear_target(const MemoryKernel& rho);

/// Wraps an RNN as a functional. RK4 runs `substeps` steps per input sample;
/// Euler always uses the signal's own step (the training discretization).
FunctionalTarget make_rnn_target(RnnParams theta, Activation act, Integrator integrator = Integrator::RK4,
                                 std::size_t substeps = 1, TargetDescriptor descriptor = TargetDescriptor::RnnModel);

FunctionalTarget make_gru_target(GruParams gru, std::size_t substeps = 1,
                                 TargetDescriptor descriptor = TargetDescriptor::GruModel);

/// Same signal on a grid `factor` times finer; every held value is repeated.
Signal refine_signal(const Signal& x, std::size_t factor);

}  // namespace memlab
