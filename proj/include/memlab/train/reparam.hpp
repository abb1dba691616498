#pragma once

#include "memlab/core/params.hpp"

namespace memlab {

struct Reparameterized {
  Matrix W;       // diag(g(M))
  Vector dW_dM;   // g'(M), the diagonal of dW/dM
};

Reparameterized reparameterize(const Vector& M, ReparamKind kind);

}  // namespace memlab
