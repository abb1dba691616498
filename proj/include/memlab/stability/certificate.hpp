#pragma once

#include <cstdint>

#include "memlab/core/types.hpp"

namespace memlab {

struct CertificateReport {
  Scalar beta0 = 0;     // -abscissa(W)
  Scalar M0 = 0;        // max |W_ij|
  Scalar L = 0;
  Scalar upsilon = 0;   // sqrt(beta0 L / M0)
  Scalar P_norm = 0;    // |P|_2 for W'P + PW = -I
  std::size_t samples = 0;
  std::size_t violations = 0;
  /// max over samples of (dV/dt + (1 - L)|v|^2) / |v|^2; <= 0 means the bound held.
  Scalar worst_margin = 0;
  Vector witness;       // sample attaining worst_margin
  bool passed() const noexcept { return violations == 0; }
};

/// Monte Carlo check of dV/dt = -|v|^2 - v'(W'D^2 P + P D^2 W)v <= -(1 - L)|v|^2
/// for V = v'Pv, D = Diag(v), over v uniform in the ball |v| <= upsilon.
CertificateReport tanh_contraction_certificate(const Matrix& W, Scalar L, std::size_t samples, std::uint64_t seed);

}  // namespace memlab
