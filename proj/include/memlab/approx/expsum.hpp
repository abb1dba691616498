#pragma once

#include <vector>

#include "memlab/core/params.hpp"
#include "memlab/core/time_grid.hpp"
#include "memlab/targets/kernel.hpp"

namespace memlab {

enum class ExpSumMode { Standard, Rescaled };

const char* to_string(ExpSumMode mode) noexcept;

/// rho_hat(t) = sum_k c_k exp(r_k t) with fixed effective rates
///   Standard:  r_k = -rate * k
///   Rescaled:  r_k = -rate / k   (w_k = -1 scaled by 1/k)
/// `rate` is the basis time scale (1 reproduces w_k = -k).
struct ExpSumModel {
  ExpSumMode mode = ExpSumMode::Standard;
  Scalar rate = 1.0;
  Vector coefficients;

  std::size_t m() const noexcept { return static_cast<std::size_t>(coefficients.size()); }
  Vector exponents() const;
  Scalar operator()(Scalar t) const;

  /// Diagonal linear RNN with W = diag(exponents), U = 1, b = 0, c = coefficients.
  RnnParams to_rnn() const;

  static Vector exponents_for(ExpSumMode mode, std::size_t m, Scalar rate);
};

struct ExpSumFit {
  ExpSumModel model;
  Scalar residual = 0;  // sum_i |rho(t_i) - rho_hat(t_i)| dt
};

/// Tikhonov-damped least squares min_c |B c - rho|^2 + damping |c|^2 over the
/// fit grid, solved by QR of the stacked system [B; sqrt(damping) I].
ExpSumFit fit_exponential_sum(const MemoryKernel& rho, std::size_t m, const TimeGrid& grid,
                              ExpSumMode mode = ExpSumMode::Standard, Scalar rate = 1.0, Scalar damping = 1e-12);

}  // namespace memlab
