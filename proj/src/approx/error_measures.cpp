#include "memlab/approx/error_measures.hpp"

#include <cmath>
#include <limits>

#include "memlab/core/errors.hpp"
#include "memlab/core/random.hpp"
#include "memlab/linalg/expm.hpp"

namespace memlab {

Scalar linear_L1_error(const MemoryKernel& rho, const RnnParams& theta, const TimeGrid& grid) {
  constexpr Scalar inf = std::numeric_limits<Scalar>::infinity();
  if (theta.d() != rho.dim()) throw DomainError("linear_L1_error: kernel and model input dimensions differ");
  Matrix G;     // e^{W t_i} U
  Matrix step;  // e^{W dt}
  try {
    G = expm(theta.W(), grid.t_start()) * theta.U;
    step = expm(theta.W(), grid.dt());
  } catch (const NumericFailure&) {
    return inf;
  }
  Scalar total = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0) G = step * G;
    const Vector model = G.transpose() * theta.c;
    const Scalar e = (rho(grid.time(i)) - model).cwiseAbs().sum();
    if (!std::isfinite(e)) return inf;
    total += e;
  }
  total *= grid.dt();
  return std::isfinite(total) ? total : inf;
}

ProbeSet make_probe_set(const std::vector<Vector>& amplitudes, std::size_t n_random, const TimeGrid& grid,
                        std::uint64_t seed, std::size_t hold_steps) {
  if (amplitudes.empty() && n_random == 0) throw DomainError("make_probe_set: probe set must be nonempty");
  const long back = std::max(0L, static_cast<long>(std::ceil(grid.t_start() / grid.dt() - 1e-9)));
  const TimeGrid sig_grid =
      TimeGrid::from_count(grid.t_start() - static_cast<Scalar>(back) * grid.dt(), grid.dt(), grid.size() + static_cast<std::size_t>(back));
  ProbeSet set{grid, {}, {}};
  for (const Vector& x : amplitudes) {
    set.signals.push_back(make_probe_signal(ProbeKind::Heaviside, x, sig_grid));
    set.norms.push_back(x.cwiseAbs().maxCoeff());
  }
  const std::size_t d = amplitudes.empty() ? 1 : static_cast<std::size_t>(amplitudes.front().size());
  Rng rng(derive_seed(seed, {0x9e0be5ULL}));
  std::uniform_real_distribution<Scalar> u(-1.0, 1.0);
  const std::size_t hold = std::max<std::size_t>(1, hold_steps);
  for (std::size_t r = 0; r < n_random; ++r) {
    Matrix v(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(sig_grid.size()));
    for (Eigen::Index k = 0; k < v.cols(); ++k) {
      if (static_cast<std::size_t>(k) % hold == 0)
        for (Eigen::Index i = 0; i < v.rows(); ++i) v(i, k) = u(rng);
      else
        v.col(k) = v.col(k - 1);
    }
    const Scalar norm = v.cwiseAbs().maxCoeff();
    set.signals.emplace_back(sig_grid, std::move(v), SignalKind::Arbitrary);
    set.norms.push_back(norm);
  }
  return set;
}

ProbeResponses evaluate_probes(const FunctionalTarget& target, const ProbeSet& probes) {
  ProbeResponses r;
  r.outputs.reserve(probes.signals.size());
  for (const Signal& s : probes.signals) r.outputs.push_back(target(s, probes.grid));
  return r;
}

Scalar sobolev_error(const ProbeResponses& reference, const FunctionalTarget& model, const ProbeSet& probes) {
  constexpr Scalar inf = std::numeric_limits<Scalar>::infinity();
  if (reference.outputs.size() != probes.signals.size()) throw DomainError("sobolev_error: response count mismatch");
  const auto n = static_cast<Eigen::Index>(probes.grid.size());
  Vector value_gap = Vector::Zero(n);
  Vector deriv_gap = Vector::Zero(n);
  for (std::size_t i = 0; i < probes.signals.size(); ++i) {
    FunctionalOutput out;
    try {
      out = model(probes.signals[i], probes.grid);
    } catch (const DivergenceError&) {
      return inf;
    }
    if (!out.y.allFinite() || !out.dy.allFinite()) return inf;
    const Scalar nx = probes.norms[i] > 0 ? probes.norms[i] : 1.0;
    value_gap = value_gap.cwiseMax((reference.outputs[i].y - out.y).cwiseAbs() / nx);
    deriv_gap = deriv_gap.cwiseMax((reference.outputs[i].dy - out.dy).cwiseAbs() / nx);
  }
  const Scalar e = (value_gap + deriv_gap).maxCoeff();
  return std::isfinite(e) ? e : inf;
}

Scalar sobolev_error(const FunctionalTarget& target, const FunctionalTarget& model, const ProbeSet& probes) {
  return sobolev_error(evaluate_probes(target, probes), model, probes);
}

}  // namespace memlab
