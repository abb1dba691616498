#pragma once

#include "memlab/core/time_grid.hpp"
#include "memlab/core/types.hpp"

namespace memlab {

/// Hidden-state path of a recurrent model. Column k of h and v belongs to
/// grid.time(k); v is the exact right-hand side at that sample.
struct Trajectory {
  TimeGrid grid;
  Matrix h;  // m x n
  Matrix v;  // m x n
  Vector y;
  Vector dy;

  /// Columns of this trajectory on `sub`, which must be aligned and inside.
  Trajectory restricted(const TimeGrid& sub) const;
};

}  // namespace memlab
