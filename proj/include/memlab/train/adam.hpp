#pragma once

#include "memlab/core/types.hpp"

namespace memlab {

/// Adam on a flat parameter vector with bias-corrected moments.
class Adam {
 public:
  explicit Adam(Scalar lr = 0.005, Scalar beta1 = 0.9, Scalar beta2 = 0.999, Scalar eps = 1e-8)
      : lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps) {}

  void step(Vector& params, const Vector& grad);
  long steps() const noexcept { return t_; }

 private:
  Scalar lr_, beta1_, beta2_, eps_;
  Vector m_, v_;
  long t_ = 0;
};

}  // namespace memlab
