#include <cmath>

#include "common.hpp"
#include "memlab/approx/error_measures.hpp"
#include "memlab/core/errors.hpp"
#include "memlab/harness/experiments.hpp"
#include "memlab/linalg/spectral.hpp"
#include "memlab/memory/probe.hpp"
#include "memlab/train/dataset.hpp"

namespace memlab {
namespace {

StudentRecord train_student(const FunctionalTarget& target, const TrainConfig& tc) {
  StudentRecord rec;
  rec.m = tc.m;
  rec.reparam = tc.reparam;
  try {
    const TrainingData data = make_dataset(target, tc);
    rec.target_mean_square = data.test.Y.array().square().mean();
    TrainResult r = train_rnn(data, target, tc, init_params(tc));
    rec.history = r.history;
    rec.first_epoch_below_1e6 = r.first_epoch_below(1e-6);
    rec.final_val_loss = r.final_val_loss();
    rec.abscissa = spectral_abscissa(r.params.W()).abscissa;
    rec.params = std::move(r.params);
  } catch (const TrainingDiverged& e) {
    rec.history = e.history;
    rec.final_val_loss = std::numeric_limits<Scalar>::infinity();
    rec.abscissa = std::nan("");
    rec.failure = e.what();
  }
  return rec;
}

Table students_table(const std::vector<const StudentSweep*>& sweeps, const std::string& name) {
  Table t{name, {"m", "reparam", "epochs", "first_epoch_below_1e-6", "final_val_loss", "abscissa", "failure"}, {}};
  for (const StudentSweep* s : sweeps)
    for (const StudentRecord& r : s->students)
      t.add({fmt(r.m), to_string(r.reparam), fmt(r.history.size()),
             r.first_epoch_below_1e6 ? fmt(*r.first_epoch_below_1e6) : std::string("none"), fmt(r.final_val_loss),
             fmt(r.abscissa), r.failure.empty() ? std::string("") : std::string("diverged")});
  return t;
}

Table history_table(const std::vector<const StudentSweep*>& sweeps, const std::string& name) {
  Table t{name, {"m", "reparam", "epoch", "train_loss", "val_loss"}, {}};
  for (const StudentSweep* s : sweeps)
    for (const StudentRecord& r : s->students)
      for (const EpochRecord& e : r.history)
        t.add({fmt(r.m), to_string(r.reparam), fmt(e.epoch), fmt(e.train_loss), fmt(e.val_loss)});
  return t;
}

Chart history_chart(const std::vector<const StudentSweep*>& sweeps, const std::string& name) {
  Chart c{name, "Validation loss during training", "epoch", "validation MSE", false, true, {}};
  for (const StudentSweep* s : sweeps)
    for (const StudentRecord& r : s->students) {
      Series ser{std::string(to_string(r.reparam)) + " m = " + std::to_string(r.m), {}, {}};
      for (const EpochRecord& e : r.history) {
        ser.x.push_back(static_cast<Scalar>(e.epoch));
        ser.y.push_back(e.val_loss);
      }
      c.series.push_back(std::move(ser));
    }
  return c;
}

}  // namespace

/// Trains one student per m and sweeps the trained ones under the Sobolev
/// error against cached target responses on the eval grid.
StudentSweep sweep_students(const ExperimentConfig& cfg, const FunctionalTarget& target, ReparamKind kind,
                            std::uint64_t sweep_seed) {
  if (cfg.models.ms.empty()) throw DomainError("student sweep: empty model list");
  StudentSweep out;
  std::vector<SweepModel> models;
  for (std::size_t m : cfg.models.ms) {
    out.students.push_back(train_student(target, cfg.train_for(m, kind)));
    if (out.students.back().params) models.push_back({m, *out.students.back().params});
  }
  if (models.empty()) return out;

  const TrainConfig tc = cfg.train_for(cfg.models.ms.front(), kind);
  const ProbeSet probes = make_probe_set(default_amplitudes(target.input_dim()), cfg.sweep.random_probes,
                                         tc.eval_grid.grid(), derive_seed(cfg.seed, {0x70726f6265ULL}));
  const ProbeResponses ref = evaluate_probes(target, probes);
  const ErrorFn err = [&](const RnnParams& th) { return sobolev_error(ref, student_functional(th, tc), probes); };
  out.table = sweep(models, cfg.sweep.resolved_betas(), cfg.sweep.n_samples, sweep_seed, err,
                    "sobolev_error on eval grid", {}, cfg.threads);
  if (models.size() >= 2) out.estimate = stability_radius_estimate(*out.table, cfg.sweep.kappa, cfg.sweep.eps_floor);
  return out;
}

NonlinearSweepResult run_nonlinear_sweep(const ExperimentConfig& cfg) {
  if (cfg.models.reparams.empty()) throw DomainError("nonlinear sweep: no reparameterization listed");
  const FunctionalTarget target = cfg.target.make();
  NonlinearSweepResult r;
  r.sweep = sweep_students(cfg, target, cfg.models.reparams.front(), cfg.seed);

  Report& rep = r.report;
  rep.config = cfg;
  rep.tables.push_back(students_table({&r.sweep}, "students"));
  rep.tables.push_back(history_table({&r.sweep}, "history"));
  rep.charts.push_back(history_chart({&r.sweep}, "history"));
  rep.summary = {{"target", cfg.target.describe()}, {"activation", cfg.models.activation}};
  if (r.sweep.table) {
    rep.tables.push_back(detail::sweep_csv_table(*r.sweep.table, "sweep"));
    rep.charts.push_back(detail::sweep_chart(*r.sweep.table, "sweep", "Perturbation error, " + cfg.target.describe()));
  }
  if (r.sweep.estimate) {
    rep.tables.push_back(detail::stability_table(*r.sweep.table, *r.sweep.estimate, "stability"));
    rep.summary["stability"] = detail::estimate_json(*r.sweep.estimate);
  }
  return r;
}

ReparamComparisonResult run_reparam_comparison(const ExperimentConfig& cfg) {
  if (cfg.models.reparams.empty()) throw DomainError("reparam comparison: no reparameterization listed");
  const FunctionalTarget target = cfg.target.make();
  ReparamComparisonResult r;
  r.kinds = cfg.models.reparams;
  for (ReparamKind k : r.kinds) r.sweeps.push_back(sweep_students(cfg, target, k, cfg.seed));

  Report& rep = r.report;
  rep.config = cfg;
  std::vector<const StudentSweep*> all;
  for (const auto& s : r.sweeps) all.push_back(&s);
  rep.tables.push_back(students_table(all, "students"));
  rep.tables.push_back(history_table(all, "history"));
  rep.charts.push_back(history_chart(all, "history"));

  Table sw{"sweep", {"reparam", "m", "beta", "error", "n_samples", "abscissa"}, {}};
  Table verdicts{"verdicts", {"reparam", "verdict", "beta0_hat", "max_abscissa", "crossings_shift_left"}, {}};
  rep.summary = {{"target", cfg.target.describe()}, {"activation", cfg.models.activation}};
  nlohmann::json per = nlohmann::json::object();
  for (std::size_t k = 0; k < r.kinds.size(); ++k) {
    const StudentSweep& s = r.sweeps[k];
    const std::string name = to_string(r.kinds[k]);
    Scalar max_abs = -std::numeric_limits<Scalar>::infinity();
    for (const auto& st : s.students)
      max_abs = std::isnan(st.abscissa) ? std::numeric_limits<Scalar>::infinity() : std::max(max_abs, st.abscissa);
    if (s.table) {
      const SweepTable& t = *s.table;
      for (std::size_t i = 0; i < t.ms.size(); ++i)
        for (std::size_t j = 0; j < t.betas.size(); ++j)
          sw.add({name, fmt(t.ms[i]), fmt(t.betas[j]),
                  fmt(t.errors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))), fmt(t.n_samples),
                  fmt(t.abscissa[i])});
      rep.charts.push_back(detail::sweep_chart(t, "sweep_" + name, "Perturbation error, " + name));
    }
    if (s.estimate) {
      verdicts.add({name, to_string(s.estimate->verdict), fmt(s.estimate->beta0_hat), fmt(max_abs),
                    s.estimate->crossings_shift_left ? "true" : "false"});
      per[name] = detail::estimate_json(*s.estimate);
    } else {
      verdicts.add({name, "undetermined", "nan", fmt(max_abs), "false"});
      per[name] = "undetermined: fewer than two trained students";
    }
  }
  rep.tables.push_back(std::move(sw));
  rep.tables.push_back(std::move(verdicts));
  rep.summary["verdicts"] = per;
  return r;
}

}  // namespace memlab
