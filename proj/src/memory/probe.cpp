#include "memlab/memory/probe.hpp"

#include <algorithm>
#include <cmath>

#include "memlab/core/errors.hpp"

namespace memlab {

std::vector<Vector> default_amplitudes(std::size_t d) {
  std::vector<Vector> out;
  for (std::size_t axis = 0; axis < d; ++axis)
    for (Scalar a : {0.25, 0.5, 1.0, 2.0})
      for (Scalar sign : {1.0, -1.0}) {
        Vector x = Vector::Zero(static_cast<Eigen::Index>(d));
        x(static_cast<Eigen::Index>(axis)) = sign * a;
        out.push_back(std::move(x));
      }
  return out;
}

TimeGrid probe_signal_grid(ProbeKind kind, const TimeGrid& query) {
  const Scalar dt = query.dt();
  long back = static_cast<long>(std::ceil(query.t_start() / dt - 1e-9));
  if (kind == ProbeKind::Reversed) back += std::max(1L, std::lround(query.t_end() / dt));
  back = std::max(back, 0L);
  const auto ub = static_cast<std::size_t>(back);
  return TimeGrid::from_count(query.t_start() - static_cast<Scalar>(back) * dt, dt, query.size() + ub);
}

MemoryCurve probe_memory(const FunctionalTarget& target, ProbeKind kind, const std::vector<Vector>& amplitudes,
                         const TimeGrid& grid, Normalization normalization) {
  if (amplitudes.empty()) throw DomainError("probe_memory: empty amplitude set");
  const TimeGrid sig_grid = probe_signal_grid(kind, grid);
  Vector curve = Vector::Zero(static_cast<Eigen::Index>(grid.size()));
  for (const Vector& x : amplitudes) {
    const Scalar norm = x.cwiseAbs().maxCoeff();
    if (norm == 0) throw DomainError("probe_memory: amplitudes must be nonzero");
    const Scalar denom = normalization == Normalization::InfNorm ? norm : norm + 1;
    const FunctionalOutput out = target(make_probe_signal(kind, x, sig_grid), grid);
    const Vector& channel = kind == ProbeKind::Impulse ? out.y : out.dy;
    if (!channel.allFinite()) throw NumericFailure("probe_memory: target response is not finite");
    curve = curve.cwiseMax(channel.cwiseAbs() / denom);
  }
  return MemoryCurve(grid, std::move(curve), kind, amplitudes, normalization);
}

MemoryCurve family_sup_curve(const std::vector<MemoryCurve>& curves) {
  if (curves.empty()) throw DomainError("family_sup_curve: no curves");
  MemoryCurve out = curves.front();
  for (std::size_t i = 1; i < curves.size(); ++i) {
    if (!(curves[i].grid == out.grid)) throw DomainError("family_sup_curve: grid mismatch");
    out.values = out.values.cwiseMax(curves[i].values);
    out.amplitudes.insert(out.amplitudes.end(), curves[i].amplitudes.begin(), curves[i].amplitudes.end());
  }
  return out;
}

}  // namespace memlab
