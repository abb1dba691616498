#pragma once

#include <cstddef>

#include "memlab/core/time_grid.hpp"
#include "memlab/core/types.hpp"

namespace memlab {

enum class SignalKind { Heaviside, Impulse, Reversed, Arbitrary };
enum class ProbeKind { Heaviside, Impulse, Reversed };

const char* to_string(SignalKind kind) noexcept;
const char* to_string(ProbeKind kind) noexcept;
ProbeKind probe_kind_from_string(const char* name);

/// Piecewise-constant (zero-order hold) input on a uniform grid. Column k of
/// `values` is the d-dimensional input held on [t_k, t_{k+1}).
struct Signal {
  TimeGrid grid;
  Matrix values;  // d x n
  SignalKind kind = SignalKind::Arbitrary;

  Signal(TimeGrid g, Matrix v, SignalKind k = SignalKind::Arbitrary);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(values.rows()); }
  std::size_t size() const noexcept { return grid.size(); }
  auto at(std::size_t k) const { return values.col(static_cast<Eigen::Index>(k)); }

  /// Held value at time t: zero before the grid, last sample after it.
  Vector sample(Scalar t) const;

  /// ||x||_inf over all samples.
  Scalar sup_norm() const;

  /// Index where integration with h = 0 begins: the support onset for
  /// Heaviside and Impulse probes, the grid start otherwise.
  std::size_t onset() const noexcept;
};

Signal make_probe_signal(ProbeKind kind, const Vector& amplitude, const TimeGrid& grid);

}  // namespace memlab
