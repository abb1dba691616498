#pragma once

#include <utility>

#include "memlab/core/random.hpp"
#include "memlab/core/signal.hpp"
#include "memlab/dynamics/trajectory.hpp"

namespace memlab {

/// Continuous-time GRU
///   dh/dt = z * (hhat - h),  z = sig(Wz x + Uz h + bz),  r = sig(Wr x + Ur h + br),
///   hhat = tanh(Wh x + Uh (r * h) + bh),  y = c'h.
/// W* act on the input, U* on the hidden state.
struct GruParams {
  Matrix Wz, Uz;
  Vector bz;
  Matrix Wr, Ur;
  Vector br;
  Matrix Wh, Uh;
  Vector bh;
  Vector c;

  std::size_t m() const noexcept { return static_cast<std::size_t>(c.size()); }
  std::size_t d() const noexcept { return static_cast<std::size_t>(Wz.cols()); }
  void validate() const;

  Vector rhs(const Vector& h, const Vector& x) const;
  /// Jacobian of rhs with respect to h.
  Matrix rhs_jacobian(const Vector& h, const Vector& x) const;

  /// Gaussian weights of the given scales; bh = 0.
  static GruParams random(Rng& rng, std::size_t m, std::size_t d, Scalar hidden_scale, Scalar input_scale,
                          Scalar bias_scale);
};

Trajectory integrate_gru(const GruParams& gru, const Signal& x, const TimeGrid& grid);
Trajectory integrate_gru(const GruParams& gru, const Signal& x);

/// Folds a constant input x into the biases: b* := W* x + b*, and zeroes W*.
GruParams absorb_heaviside(const GruParams& gru, const Vector& x);

/// Diag(sig(bz)) (Uh Diag(sig(br)) - I): the linearization at h = 0 of a GRU
/// whose (absorbed) candidate bias bh is zero.
Matrix gru_equilibrium_jacobian(const GruParams& gru, const std::pair<Vector, Vector>& absorbed_biases);

}  // namespace memlab
