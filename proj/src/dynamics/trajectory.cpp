#include "memlab/dynamics/trajectory.hpp"

#include "memlab/core/errors.hpp"

namespace memlab {

Trajectory Trajectory::restricted(const TimeGrid& sub) const {
  if (sub == grid) return *this;
  if (!grid.aligned_with(sub)) throw DomainError("trajectory: query grid is not aligned with the signal grid");
  const long off = grid.offset_of(sub);
  if (off < 0 || static_cast<std::size_t>(off) + sub.size() > grid.size())
    throw DomainError("trajectory: query grid extends beyond the signal grid");
  const auto o = static_cast<Eigen::Index>(off);
  const auto n = static_cast<Eigen::Index>(sub.size());
  return Trajectory{sub, h.middleCols(o, n), v.middleCols(o, n), y.segment(o, n), dy.segment(o, n)};
}

}  // namespace memlab
