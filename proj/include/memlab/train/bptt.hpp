#pragma once

#include "memlab/core/activation.hpp"
#include "memlab/core/params.hpp"
#include "memlab/train/dataset.hpp"

namespace memlab {

/// Columns [first, first + count) of a dataset.
struct BatchView {
  const Dataset* data = nullptr;
  std::size_t first = 0;
  std::size_t count = 0;

  static BatchView all(const Dataset& d) { return {&d, 0, d.size()}; }
};

/// Gradients of the batch MSE. For reparameterized models the recurrent
/// gradient is reported in gM (chained through g) and gW holds dL/dW.
struct Gradients {
  Scalar loss = 0;
  Matrix gW;
  Vector gM;
  Matrix gU;
  Vector gb;
  Vector gc;
};

/// Mean over samples and output times of (c'h_k - y_k)^2 under the explicit
/// Euler recursion at the dataset's step.
Scalar mse_loss(const RnnParams& theta, const Activation& act, const BatchView& batch);

/// Reverse-mode gradient of mse_loss. A non-finite loss or gradient raises
/// DivergenceError naming the first offending sample (dataset column).
Gradients bptt_grad(const RnnParams& theta, const Activation& act, const BatchView& batch);

/// Flat parameter vector: [W or M, U, b, c], column-major.
Vector pack_params(const RnnParams& theta);
void unpack_params(const Vector& flat, RnnParams& theta);
Vector pack_gradients(const Gradients& g, const RnnParams& theta);

}  // namespace memlab
