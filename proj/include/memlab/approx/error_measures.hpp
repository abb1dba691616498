#pragma once

#include <cstdint>
#include <vector>

#include "memlab/core/params.hpp"
#include "memlab/core/signal.hpp"
#include "memlab/targets/functional.hpp"
#include "memlab/targets/kernel.hpp"

namespace memlab {

/// sum_i |rho(t_i) - c' e^{W t_i} U|_1 dt for a linear-activation RNN. The
/// propagator e^{W dt} is formed once and applied along the grid. Returns
/// +inf when the kernel estimate overflows.
Scalar linear_L1_error(const MemoryKernel& rho, const RnnParams& theta, const TimeGrid& grid);

/// Test inputs for the Sobolev estimator, all sharing one query grid.
struct ProbeSet {
  TimeGrid grid;
  std::vector<Signal> signals;
  std::vector<Scalar> norms;  // |x|_inf of each signal
};

/// Heaviside probes for each amplitude plus `n_random` piecewise-constant
/// signals with per-step values uniform in [-1, 1].
ProbeSet make_probe_set(const std::vector<Vector>& amplitudes, std::size_t n_random, const TimeGrid& grid,
                        std::uint64_t seed, std::size_t hold_steps = 1);

/// Target responses on a probe set, cached so a sweep evaluates them once.
struct ProbeResponses {
  std::vector<FunctionalOutput> outputs;
};

ProbeResponses evaluate_probes(const FunctionalTarget& target, const ProbeSet& probes);

/// sup_t ( max_x |y_t - yhat_t|/|x| + max_x |dy_t - dyhat_t|/|x| ): a lower
/// bound on the Sobolev-type functional norm.
Scalar sobolev_error(const ProbeResponses& reference, const FunctionalTarget& model, const ProbeSet& probes);
Scalar sobolev_error(const FunctionalTarget& target, const FunctionalTarget& model, const ProbeSet& probes);

}  // namespace memlab
