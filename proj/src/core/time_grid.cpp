#include "memlab/core/time_grid.hpp"

#include <cmath>

#include "memlab/core/errors.hpp"

namespace memlab {

TimeGrid::TimeGrid(Scalar t_start, Scalar t_end, Scalar dt) : t_start_(t_start), dt_(dt), n_(0) {
  if (!std::isfinite(t_start) || !std::isfinite(t_end) || !std::isfinite(dt))
    throw InvalidGrid("time grid bounds must be finite");
  if (!(dt > 0)) throw InvalidGrid("time grid step must be positive");
  if (!(t_end > t_start)) throw InvalidGrid("time grid needs t_end > t_start");
  n_ = static_cast<std::size_t>(std::llround((t_end - t_start) / dt)) + 1;
}

TimeGrid TimeGrid::from_count(Scalar t_start, Scalar dt, std::size_t n) {
  if (n == 0) throw InvalidGrid("time grid must have at least one sample");
  if (!(dt > 0) || !std::isfinite(dt) || !std::isfinite(t_start))
    throw InvalidGrid("time grid step must be positive and finite");
  return TimeGrid(t_start, dt, n, 0);
}

std::vector<Scalar> TimeGrid::times() const {
  std::vector<Scalar> out(n_);
  for (std::size_t k = 0; k < n_; ++k) out[k] = time(k);
  return out;
}

std::size_t TimeGrid::first_nonnegative() const noexcept {
  // A relative slack keeps a sample that is zero up to rounding.
  const Scalar tol = 1e-9 * dt_;
  if (t_start_ >= -tol) return 0;
  auto k = static_cast<std::size_t>(std::ceil((-t_start_ - tol) / dt_));
  while (k > 0 && time(k - 1) >= -tol) --k;
  while (k < n_ && time(k) < -tol) ++k;
  return k < n_ ? k : n_;
}

std::size_t TimeGrid::nearest_index(Scalar t) const noexcept {
  const Scalar r = std::round((t - t_start_) / dt_);
  if (r <= 0) return 0;
  const auto k = static_cast<std::size_t>(r);
  return k >= n_ ? n_ - 1 : k;
}

bool TimeGrid::aligned_with(const TimeGrid& other) const noexcept {
  if (std::abs(other.dt_ - dt_) > 1e-12 * dt_) return false;
  const Scalar off = (other.t_start_ - t_start_) / dt_;
  return std::abs(off - std::round(off)) < 1e-7;
}

long TimeGrid::offset_of(const TimeGrid& other) const noexcept {
  return std::lround((other.t_start_ - t_start_) / dt_);
}

TimeGrid TimeGrid::refined(std::size_t factor) const {
  if (factor == 0) throw InvalidGrid("refinement factor must be positive");
  return from_count(t_start_, dt_ / static_cast<Scalar>(factor), (n_ - 1) * factor + 1);
}

}  // namespace memlab
