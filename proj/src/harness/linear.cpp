#include <cmath>

#include "common.hpp"
#include "memlab/approx/error_measures.hpp"
#include "memlab/core/errors.hpp"
#include "memlab/harness/experiments.hpp"
#include "memlab/stability/perturb.hpp"

namespace memlab {

LinearSweepResult run_linear_sweep(const ExperimentConfig& cfg) {
  if (cfg.models.ms.empty()) throw DomainError("linear sweep: empty model list");
  const MemoryKernel rho = cfg.target.kernel();
  const TimeGrid grid = cfg.sweep.error_grid.grid();

  LinearSweepResult r;
  std::vector<SweepModel> models;
  for (std::size_t m : cfg.models.ms) {
    r.fits.push_back(fit_exponential_sum(rho, m, grid, cfg.models.basis, cfg.models.basis_rate));
    models.push_back({m, r.fits.back().model.to_rnn()});
  }
  const ErrorFn err = [&](const RnnParams& th) { return linear_L1_error(rho, th, grid); };
  // The kernel c' e^{Wt} U does not see b.
  PerturbationMask mask;
  mask.b = false;
  r.table = sweep(models, cfg.sweep.resolved_betas(), cfg.sweep.n_samples, cfg.seed, err,
                  "linear_L1_error on " + std::to_string(grid.size()) + "-point grid", mask, cfg.threads);
  r.estimate = stability_radius_estimate(r.table, cfg.sweep.kappa, cfg.sweep.eps_floor);

  Report& rep = r.report;
  rep.config = cfg;
  rep.tables.push_back(detail::sweep_csv_table(r.table, "sweep"));
  rep.tables.push_back(detail::stability_table(r.table, r.estimate, "stability"));
  Table fits{"fits", {"m", "mode", "rate", "residual", "max_abs_coefficient"}, {}};
  for (const auto& f : r.fits)
    fits.add({fmt(f.model.m()), to_string(f.model.mode), fmt(f.model.rate), fmt(f.residual),
              fmt(f.model.coefficients.cwiseAbs().maxCoeff())});
  rep.tables.push_back(std::move(fits));
  rep.charts.push_back(detail::sweep_chart(r.table, "sweep", "Perturbation error, " + cfg.target.describe()));
  rep.summary = {{"target", cfg.target.describe()},
                 {"error", r.table.descriptor},
                 {"perturbed", "W, U, c (spectral norm for W and U, Euclidean for c)"},
                 {"stability", detail::estimate_json(r.estimate)}};
  return r;
}

}  // namespace memlab
