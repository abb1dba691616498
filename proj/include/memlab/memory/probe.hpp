#pragma once

#include <vector>

#include "memlab/core/memory_curve.hpp"
#include "memlab/targets/functional.hpp"

namespace memlab {

/// {+-0.25, +-0.5, +-1, +-2} along each coordinate axis of R^d.
std::vector<Vector> default_amplitudes(std::size_t d = 1);

/// Grid on which the probe input lives for a query grid: starts at the last
/// sample <= 0 for Heaviside and impulse probes; Reversed probes get a
/// pre-period as long as the query horizon.
TimeGrid probe_signal_grid(ProbeKind kind, const TimeGrid& query);

/// M(t) = max_x |dy_t| / n(x) (Heaviside, Reversed) or max_x |y_t| / n(x)
/// (Impulse), with n(x) = |x|_inf or |x|_inf + 1.
MemoryCurve probe_memory(const FunctionalTarget& target, ProbeKind kind, const std::vector<Vector>& amplitudes,
                         const TimeGrid& grid, Normalization normalization = Normalization::InfNorm);

/// Pointwise maximum of curves sharing one grid.
MemoryCurve family_sup_curve(const std::vector<MemoryCurve>& curves);

}  // namespace memlab
