#pragma once

#include <limits>

#include "memlab/core/memory_curve.hpp"

namespace memlab {

enum class DecayTag { Exponential, Polynomial, NonDecaying };

const char* to_string(DecayTag tag) noexcept;

struct DecayClass {
  DecayTag tag = DecayTag::NonDecaying;
  /// beta-hat for Exponential, p-hat for Polynomial, NaN otherwise.
  Scalar rate = std::numeric_limits<Scalar>::quiet_NaN();
  Scalar exp_rate = std::numeric_limits<Scalar>::quiet_NaN();
  Scalar poly_rate = std::numeric_limits<Scalar>::quiet_NaN();
  Scalar r2_exp = 0;
  Scalar r2_poly = 0;
  Scalar window_start = 0;
  Scalar window_end = 0;
  std::size_t window_samples = 0;
  bool below_noise = false;
};

struct ClassifyOptions {
  Scalar tail_fraction = 0.5;
  Scalar noise_floor = 1e-12;
  std::size_t min_tail_samples = 20;
  Scalar nondecaying_mean_ratio = 0.5;
  Scalar min_r2 = 0.5;
};

/// Regresses log M against t (exponential candidate) and against log(1 + t)
/// (polynomial candidate) over the tail window: the last `tail_fraction` of
/// the samples above the noise floor.
DecayClass classify_decay(const MemoryCurve& curve, const ClassifyOptions& opts = {});
inline DecayClass classify_decay(const MemoryCurve& curve, Scalar tail_fraction) {
  ClassifyOptions o;
  o.tail_fraction = tail_fraction;
  return classify_decay(curve, o);
}

}  // namespace memlab
