#include "memlab/stability/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>

#include "memlab/core/errors.hpp"
#include "memlab/core/parallel.hpp"
#include "memlab/core/random.hpp"
#include "memlab/linalg/spectral.hpp"

namespace memlab {

std::vector<Scalar> linear_beta_grid() {
  std::vector<Scalar> g{0.0};
  for (int k = 0; k <= 20; ++k) g.push_back(std::ldexp(5e-4, k));
  return g;
}

std::vector<Scalar> nonlinear_beta_grid() {
  std::vector<Scalar> g{0.0};
  for (int k = 0; k <= 35; ++k) g.push_back(std::ldexp(1e-11, k));
  return g;
}

std::string SweepTable::to_csv() const {
  std::string out = "m,beta,error,n_samples,abscissa\n";
  char buf[160];
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < betas.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%zu,%.17g\n", ms[i], betas[j],
                    errors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), n_samples, abscissa[i]);
      out += buf;
    }
  return out;
}

SweepTable sweep(const std::vector<SweepModel>& models, const std::vector<Scalar>& betas, std::size_t n_samples,
                 std::uint64_t seed, const ErrorFn& error, const std::string& descriptor,
                 const PerturbationMask& mask, unsigned threads) {
  if (models.empty()) throw DomainError("sweep: no models");
  if (betas.empty()) throw DomainError("sweep: empty beta grid");
  if (n_samples == 0) throw DomainError("sweep: n_samples must be positive");
  for (std::size_t j = 1; j < betas.size(); ++j)
    if (!(betas[j] > betas[j - 1])) throw DomainError("sweep: beta grid must be increasing");

  SweepTable t;
  t.descriptor = descriptor;
  t.betas = betas;
  t.n_samples = n_samples;
  t.seed = seed;
  t.errors.resize(static_cast<Eigen::Index>(models.size()), static_cast<Eigen::Index>(betas.size()));
  t.ms.resize(models.size());
  t.base_error.resize(models.size());
  t.abscissa.resize(models.size());

  parallel_for(models.size(), threads, [&](std::size_t i) {
    const SweepModel& model = models[i];
    t.ms[i] = model.m;
    t.abscissa[i] = spectral_abscissa(model.params.W()).abscissa;
    const Scalar base = guarded_error(error, model.params);
    t.base_error[i] = base;
    std::vector<PerturbationDirection> dirs;
    dirs.reserve(n_samples);
    const std::uint64_t model_seed = derive_seed(seed, {model.m, i});
    for (std::size_t s = 0; s < n_samples; ++s) dirs.push_back(draw_direction(model.params, model_seed, s, mask));
    Scalar running = base;
    for (std::size_t j = 0; j < betas.size(); ++j) {
      if (betas[j] > 0)
        for (const auto& dir : dirs)
          running = std::max(running, guarded_error(error, apply_perturbation(model.params, dir, betas[j])));
      t.errors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = running;
    }
  });
  return t;
}

const char* to_string(Verdict v) noexcept { return v == Verdict::Stable ? "stable" : "unstable"; }

namespace {

Scalar crossing(const SweepTable& t, Eigen::Index prev, Eigen::Index cur) {
  const auto n = static_cast<Eigen::Index>(t.betas.size());
  for (Eigen::Index j = 0; j < n; ++j) {
    const Scalar a = t.errors(cur, j), b = t.errors(prev, j);
    if (!(a > b)) continue;
    // Already worse before any perturbation: the curves never intersect.
    if (j == 0) return std::numeric_limits<Scalar>::quiet_NaN();
    const Scalar d1 = a - b;
    const Scalar d0 = t.errors(cur, j - 1) - t.errors(prev, j - 1);
    const Scalar b0 = t.betas[static_cast<std::size_t>(j - 1)], b1 = t.betas[static_cast<std::size_t>(j)];
    if (!std::isfinite(d0) || !std::isfinite(d1) || d1 == d0) return b1;
    return b0 + (b1 - b0) * (-d0) / (d1 - d0);
  }
  return std::numeric_limits<Scalar>::infinity();
}

}  // namespace

StabilityEstimate stability_radius_estimate(const SweepTable& table, Scalar kappa, Scalar eps_floor) {
  if (table.ms.size() < 2) throw DomainError("stability_radius_estimate: need at least two models");
  if (table.betas.size() < 3) throw DomainError("stability_radius_estimate: need at least three radii");
  StabilityEstimate est;
  est.kappa = kappa;
  est.eps_floor = eps_floor;

  // Models ordered by m; the table is usually already sorted.
  std::vector<Eigen::Index> order(table.ms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Eigen::Index>(i);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return table.ms[static_cast<std::size_t>(a)] < table.ms[static_cast<std::size_t>(b)];
  });
  for (auto i : order) est.ms_used.push_back(table.ms[static_cast<std::size_t>(i)]);

  for (std::size_t k = 1; k < order.size(); ++k) est.crossings.push_back(crossing(table, order[k - 1], order[k]));

  if (std::isinf(kappa)) {
    est.beta0_hat = table.betas.back();
    est.verdict = Verdict::Stable;
    return est;
  }

  const Eigen::Index top = order[order.size() - 1], second = order[order.size() - 2];
  std::size_t last_ok = 0;
  bool any = false;
  for (std::size_t j = 0; j < table.betas.size(); ++j) {
    bool ok = true;
    for (Eigen::Index i : {top, second}) {
      const Scalar thresh = kappa * std::max(table.errors(i, 0), eps_floor);
      const Scalar e = table.errors(i, static_cast<Eigen::Index>(j));
      ok = ok && std::isfinite(e) && e <= thresh;
    }
    if (!ok) break;
    last_ok = j;
    any = true;
  }
  est.beta0_hat = any ? table.betas[last_ok] : 0.0;

  const std::size_t nc = est.crossings.size();
  const std::size_t use = std::min<std::size_t>(3, nc);
  if (use >= 2) {
    bool dec = true;
    for (std::size_t k = nc - use; k < nc; ++k) dec = dec && !std::isnan(est.crossings[k]);
    for (std::size_t k = nc - use + 1; k < nc; ++k) dec = dec && est.crossings[k] < est.crossings[k - 1];
    est.crossings_shift_left = dec;
  }
  est.verdict = (est.beta0_hat == 0 || est.crossings_shift_left) ? Verdict::Unstable : Verdict::Stable;
  return est;
}

}  // namespace memlab
