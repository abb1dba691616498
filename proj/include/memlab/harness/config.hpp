#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "memlab/approx/expsum.hpp"
#include "memlab/core/params.hpp"
#include "memlab/targets/functional.hpp"
#include "memlab/targets/kernel.hpp"
#include "memlab/train/config.hpp"

namespace memlab {

enum class ExperimentKind { LinearSweep, NonlinearSweep, ReparamComparison, FilterTeachers, PeriodicDemo, EquivalenceStudy };

const char* to_string(ExperimentKind k) noexcept;
ExperimentKind experiment_from_string(const std::string& name);

/// A target functional: a kernel, optionally wrapped in tanh.
struct TargetSpec {
  std::string functional = "linear";  // linear | tanh
  std::string family = "exp";         // exp | poly | table
  Scalar parameter = 0.9;             // gamma or p
  std::string table;                  // CSV path when family = table

  MemoryKernel kernel() const;
  FunctionalTarget make() const;
  std::string describe() const;
};

struct ModelSpec {
  std::vector<std::size_t> ms{2, 4, 8, 16};
  std::string activation = "linear";
  std::vector<ReparamKind> reparams{ReparamKind::Direct, ReparamKind::NegExp, ReparamKind::NegSoftplus};
  /// Exponential-sum basis for linear fits.
  ExpSumMode basis = ExpSumMode::Standard;
  Scalar basis_rate = 0.05;
};

struct SweepSpec {
  std::string beta_grid = "linear";  // linear | nonlinear | custom
  std::vector<Scalar> betas;         // used when beta_grid = custom
  std::size_t n_samples = 16;
  Scalar kappa = 3;
  Scalar eps_floor = 1e-9;
  /// Grid of the L1 kernel error (linear sweeps).
  GridSpec error_grid{1, 100, 1};
  /// Random piecewise-constant probes added to the Heaviside amplitudes in
  /// Sobolev errors.
  std::size_t random_probes = 4;

  std::vector<Scalar> resolved_betas() const;
};

struct FilterSpec {
  std::vector<Scalar> abscissae{-1.0, -0.5, -0.1, -0.02};
  std::size_t teachers_per_abscissa = 3;
  std::size_t teacher_m = 64;
  /// approx_ok when the largest student reaches val_loss <= approx_tol * E[y^2].
  Scalar approx_tol = 1e-2;
  /// Memory probing of the teachers.
  GridSpec probe_grid{0, 10, 0.01};
};

struct EquivalenceSpec {
  std::size_t repeats = 20;
  std::size_t m = 8;
  bool rnn = true;
  bool gru = true;
  Scalar abscissa_min = -1.0;  // RNN abscissae uniform in [min, max]
  Scalar abscissa_max = -0.2;
  GridSpec probe_grid{0, 100, 0.01};
};

struct PeriodicSpec {
  std::size_t ring = 16;
  std::vector<Scalar> ring_radii{0.5, 0.95};
  Scalar t_end = 40;
  Scalar dt = 0.01;
  /// Bisection of the basin boundary along the diagonal v1 = v2.
  std::size_t bisection_steps = 60;
  Scalar settle_time = 80;
};

/// One experiment, fully serializable. `out_dir` and `threads` do not affect
/// results and are excluded from the config hash.
struct ExperimentConfig {
  static constexpr int kSchemaVersion = 1;

  ExperimentKind experiment = ExperimentKind::LinearSweep;
  std::uint64_t seed = 0;
  TargetSpec target;
  ModelSpec models;
  SweepSpec sweep;
  /// Training settings; m, activation and reparam come from `models`, the
  /// seed from `seed`.
  TrainConfig train;
  FilterSpec filter;
  EquivalenceSpec equivalence;
  PeriodicSpec periodic;
  std::string out_dir = "out";
  unsigned threads = 1;

  TrainConfig train_for(std::size_t m, ReparamKind kind) const;
  void validate() const;
};

/// Canonical JSON of the hashed fields (sorted keys).
nlohmann::json to_json(const ExperimentConfig& cfg);
/// Strict parse: unknown keys, a wrong schema_version, or per-model keys in
/// the train block raise ConfigError.
ExperimentConfig experiment_config_from_json(const nlohmann::json& j);
ExperimentConfig load_experiment_config(const std::string& path);

/// 64-bit FNV-1a of the canonical JSON, as 16 hex digits.
std::string config_hash(const ExperimentConfig& cfg);
std::string fnv1a_hex(const std::string& bytes);

}  // namespace memlab
