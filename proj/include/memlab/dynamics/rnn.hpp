#pragma once

#include "memlab/core/activation.hpp"
#include "memlab/core/params.hpp"
#include "memlab/core/signal.hpp"
#include "memlab/dynamics/trajectory.hpp"

namespace memlab {

/// Classical RK4 on dh/dt = sigma(W h + U x + b) with the input held constant
/// over each step. Integration starts at x.onset() with h = 0 and runs over
/// the signal's grid; the result is reported on `grid` (aligned with x.grid).
Trajectory integrate_rnn(const RnnParams& theta, const Activation& act, const Signal& x, const TimeGrid& grid);
Trajectory integrate_rnn(const RnnParams& theta, const Activation& act, const Signal& x);

/// Explicit Euler h_{k+1} = h_k + dt sigma(W h_k + U x_k + b) from h_0 = 0 at the
/// onset. The input is sampled (zero-order hold) at the Euler times, so dt may
/// differ from the signal's own step.
Trajectory discrete_forward(const RnnParams& theta, const Activation& act, const Signal& x, Scalar dt);

}  // namespace memlab
