#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "memlab/core/params.hpp"
#include "memlab/stability/perturb.hpp"

namespace memlab {

std::vector<Scalar> linear_beta_grid();     // 0 and 5e-4 * 2^k, k = 0..20
std::vector<Scalar> nonlinear_beta_grid();  // 0 and 1e-11 * 2^k, k = 0..35

struct SweepModel {
  std::size_t m = 0;
  RnnParams params;
};

/// E_m(beta) over models x radii. errors(i, j) belongs to models[i], betas[j].
struct SweepTable {
  std::string descriptor;
  std::vector<std::size_t> ms;
  std::vector<Scalar> betas;
  Matrix errors;
  std::vector<Scalar> base_error;
  std::vector<Scalar> abscissa;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;

  /// Columns m, beta, error, n_samples, abscissa; numbers in %.17g.
  std::string to_csv() const;
};

/// For each model, n_samples unit directions are drawn once (seeded by m and
/// the sample index) and scaled through the beta grid. Each cell is the max
/// over all samples at radius <= beta, hence nondecreasing in beta.
SweepTable sweep(const std::vector<SweepModel>& models, const std::vector<Scalar>& betas, std::size_t n_samples,
                 std::uint64_t seed, const ErrorFn& error, const std::string& descriptor,
                 const PerturbationMask& mask = {}, unsigned threads = 1);

enum class Verdict { Stable, Unstable };
const char* to_string(Verdict v) noexcept;

struct StabilityEstimate {
  Scalar beta0_hat = 0;
  Scalar kappa = 3;
  Scalar eps_floor = 1e-9;
  std::vector<std::size_t> ms_used;
  /// crossings[k] is beta*(ms[k+1]): where E_{ms[k+1]} first exceeds E_{ms[k]},
  /// linearly interpolated between neighbouring grid radii (+inf if never,
  /// NaN if E_{ms[k+1]} is already larger at beta = 0).
  std::vector<Scalar> crossings;
  bool crossings_shift_left = false;
  Verdict verdict = Verdict::Unstable;
};

/// beta0_hat: the largest radius of the grid prefix on which the two largest
/// models satisfy E_m(beta) <= kappa * max(E_m(0), eps_floor) with E_m(beta)
/// finite. Unstable when beta0_hat = 0 or when the crossings of the three
/// largest m are all defined and strictly decrease.
StabilityEstimate stability_radius_estimate(const SweepTable& table, Scalar kappa = 3, Scalar eps_floor = 1e-9);

}  // namespace memlab
