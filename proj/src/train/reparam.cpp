#include "memlab/train/reparam.hpp"

namespace memlab {

Reparameterized reparameterize(const Vector& M, ReparamKind kind) {
  Reparameterized r;
  r.W = M.unaryExpr([kind](Scalar z) { return reparam_value(kind, z); }).asDiagonal();
  r.dW_dM = M.unaryExpr([kind](Scalar z) { return reparam_derivative(kind, z); });
  return r;
}

}  // namespace memlab
