#include "memlab/train/adam.hpp"

#include <cmath>

namespace memlab {

void Adam::step(Vector& params, const Vector& grad) {
  if (m_.size() != params.size()) {
    m_ = Vector::Zero(params.size());
    v_ = Vector::Zero(params.size());
  }
  ++t_;
  m_ = beta1_ * m_ + (1 - beta1_) * grad;
  v_ = beta2_ * v_ + (1 - beta2_) * grad.cwiseAbs2();
  const Scalar c1 = 1 - std::pow(beta1_, static_cast<Scalar>(t_));
  const Scalar c2 = 1 - std::pow(beta2_, static_cast<Scalar>(t_));
  params.array() -= lr_ * (m_.array() / c1) / ((v_.array() / c2).sqrt() + eps_);
}

}  // namespace memlab
