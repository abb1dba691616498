#pragma once

#include <optional>
#include <string>
#include <vector>

#include "memlab/approx/expsum.hpp"
#include "memlab/core/memory_curve.hpp"
#include "memlab/harness/config.hpp"
#include "memlab/harness/report.hpp"
#include "memlab/memory/classify.hpp"
#include "memlab/stability/sweep.hpp"
#include "memlab/train/trainer.hpp"

namespace memlab {

/// Exponential-sum fits per m, swept with the L1 kernel error.
struct LinearSweepResult {
  std::vector<ExpSumFit> fits;
  SweepTable table;
  StabilityEstimate estimate;
  Report report;
};

LinearSweepResult run_linear_sweep(const ExperimentConfig& cfg);

/// One trained student and how training went.
struct StudentRecord {
  std::size_t m = 0;
  ReparamKind reparam = ReparamKind::Direct;
  std::optional<RnnParams> params;  // empty if training diverged
  std::vector<EpochRecord> history;
  std::optional<std::size_t> first_epoch_below_1e6;
  Scalar final_val_loss = 0;
  Scalar target_mean_square = 0;  // mean of y^2 over the validation split
  Scalar abscissa = 0;
  std::string failure;
};

/// Sweep of trained students against a target under the Sobolev error.
struct StudentSweep {
  std::vector<StudentRecord> students;
  std::optional<SweepTable> table;  // empty when no student trained
  std::optional<StabilityEstimate> estimate;
};

/// Trains one student per cfg.models.ms (students that diverge are recorded
/// and skipped) and sweeps them under the Sobolev error on the eval grid.
StudentSweep sweep_students(const ExperimentConfig& cfg, const FunctionalTarget& target, ReparamKind kind,
                            std::uint64_t sweep_seed);

struct NonlinearSweepResult {
  StudentSweep sweep;
  Report report;
};

NonlinearSweepResult run_nonlinear_sweep(const ExperimentConfig& cfg);

struct ReparamComparisonResult {
  std::vector<ReparamKind> kinds;
  std::vector<StudentSweep> sweeps;  // parallel to kinds
  Report report;
};

ReparamComparisonResult run_reparam_comparison(const ExperimentConfig& cfg);

struct TeacherRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  Scalar target_abscissa = 0;
  Scalar abscissa = 0;
  DecayClass decay;
  bool approx_ok = false;
  bool stable = false;
  Scalar relative_val_loss = 0;
  Scalar beta0_hat = 0;
  Scalar max_student_abscissa = 0;
  std::string failure;
  bool kept() const noexcept { return approx_ok && stable; }
};

struct FilterResult {
  std::vector<TeacherRecord> teachers;
  Report report;
};

FilterResult run_filter_teachers(const ExperimentConfig& cfg);

struct OrbitWitness {
  bool closed = false;
  Scalar revolutions = 0;  // winding about the origin, in turns
  Scalar return_distance = 0;
  Scalar first_time = 0;
  Scalar return_time = 0;
};

struct PeriodicDemoResult {
  Matrix W;
  Scalar boundary_radius = 0;  // v(0) = r (1, 1) sits on the basin boundary of 0
  MemoryCurve boundary_memory{TimeGrid::from_count(0, 1, 1), Vector::Zero(1), ProbeKind::Heaviside, {}};
  DecayClass boundary_class;
  OrbitWitness witness;
  std::vector<Matrix> ring_paths;  // 2 x n each
  Matrix boundary_path;            // 2 x n
  Report report;
};

/// v-dynamics dv/dt = (1 - v^2) .* (W v) of the tanh RNN h' = tanh(W h).
PeriodicDemoResult run_periodic_demo(const ExperimentConfig& cfg);

/// RK4 path of the v-dynamics on [0, t_end].
Matrix integrate_v_dynamics(const Matrix& W, const Vector& v0, Scalar t_end, Scalar dt);

/// First pair j > i with |p_j - p_i| < tol after at least one full turn of
/// the unwrapped polar angle between them.
OrbitWitness find_closed_orbit(const Matrix& path, Scalar dt, Scalar tol);

struct EquivalenceRecord {
  std::string model;  // "rnn" or "gru"
  std::size_t repeat = 0;
  DecayClass heaviside;
  DecayClass impulse;
  bool agree = false;        // same DecayTag
  bool rates_close = false;  // both Exponential with |rate_H - rate_I| <= 0.2 rate_H
};

struct EquivalenceResult {
  std::vector<EquivalenceRecord> records;
  Scalar agreement = 0;      // over all records
  Scalar linear_gap = 0;     // linear RNN: max |M_H - M_I| over t > 0
  Report report;
};

EquivalenceResult run_equivalence_study(const ExperimentConfig& cfg);

/// Dispatch on cfg.experiment, returning the report.
Report run_experiment(const ExperimentConfig& cfg);

}  // namespace memlab
