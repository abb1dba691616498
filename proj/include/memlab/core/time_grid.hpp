#pragma once

#include <cstddef>
#include <vector>

#include "memlab/core/types.hpp"

namespace memlab {

/// Uniform time grid. Sample k sits at t_start + k * dt; times are always
/// computed by index multiplication so there is no cumulative drift.
class TimeGrid {
 public:
  /// Grid covering [t_start, t_end]; the sample count is
  /// round((t_end - t_start) / dt) + 1.
  TimeGrid(Scalar t_start, Scalar t_end, Scalar dt);

  static TimeGrid from_count(Scalar t_start, Scalar dt, std::size_t n);

  Scalar t_start() const noexcept { return t_start_; }
  Scalar t_end() const noexcept { return time(n_ - 1); }
  Scalar dt() const noexcept { return dt_; }
  std::size_t size() const noexcept { return n_; }

  Scalar time(std::size_t k) const noexcept { return t_start_ + static_cast<Scalar>(k) * dt_; }
  Scalar operator[](std::size_t k) const noexcept { return time(k); }
  std::vector<Scalar> times() const;

  /// Index of the first sample with t >= 0, or size() if none.
  std::size_t first_nonnegative() const noexcept;

  /// Index of the sample nearest to t (clamped to the grid).
  std::size_t nearest_index(Scalar t) const noexcept;

  /// True when `other` has the same step and its samples coincide with ours.
  bool aligned_with(const TimeGrid& other) const noexcept;

  /// Signed sample offset of other.time(0) relative to time(0); only
  /// meaningful when aligned_with(other).
  long offset_of(const TimeGrid& other) const noexcept;

  TimeGrid refined(std::size_t factor) const;

  bool operator==(const TimeGrid& other) const noexcept {
    return t_start_ == other.t_start_ && dt_ == other.dt_ && n_ == other.n_;
  }

 private:
  TimeGrid(Scalar t_start, Scalar dt, std::size_t n, int) : t_start_(t_start), dt_(dt), n_(n) {}

  Scalar t_start_;
  Scalar dt_;
  std::size_t n_;
};

}  // namespace memlab
