#include <cmath>

#include "common.hpp"
#include "memlab/core/errors.hpp"
#include "memlab/core/random.hpp"
#include "memlab/harness/experiments.hpp"
#include "memlab/linalg/spectral.hpp"
#include "memlab/memory/probe.hpp"
#include "memlab/targets/teacher.hpp"

namespace memlab {

FilterResult run_filter_teachers(const ExperimentConfig& cfg) {
  if (cfg.models.reparams.empty()) throw DomainError("filter: no reparameterization listed");
  const FilterSpec& fs = cfg.filter;
  const Activation tanh_act = Activation::tanh();
  const TimeGrid probe_grid = fs.probe_grid.grid();

  FilterResult r;
  Table curves{"teacher_memory", {"teacher", "t", "memory"}, {}};
  Chart chart{"teacher_memory", "Heaviside memory of the teachers", "t", "memory M(t)", false, true, {}};
  std::size_t index = 0;
  for (Scalar a : fs.abscissae) {
    for (std::size_t k = 0; k < fs.teachers_per_abscissa; ++k, ++index) {
      TeacherRecord rec;
      rec.index = index;
      rec.seed = derive_seed(cfg.seed, {0x7eac4e5ULL, index});
      rec.target_abscissa = a;
      try {
        TeacherSpectrum spec;
        spec.abscissa = a;
        const FunctionalTarget teacher = make_teacher_rnn(rec.seed, fs.teacher_m, spec, tanh_act);
        rec.abscissa = spectral_abscissa(teacher.rnn_params()->W()).abscissa;

        const MemoryCurve mem = probe_memory(teacher, ProbeKind::Heaviside, default_amplitudes(), probe_grid);
        rec.decay = classify_decay(mem);
        Series s{"teacher " + std::to_string(index) + " (a = " + fmt(a) + ")", {}, {}};
        for (std::size_t i = 0; i < mem.size(); ++i) {
          curves.add({fmt(index), fmt(mem.grid[i]), fmt(mem.values(static_cast<Eigen::Index>(i)))});
          s.x.push_back(mem.grid[i]);
          s.y.push_back(mem.values(static_cast<Eigen::Index>(i)));
        }
        chart.series.push_back(std::move(s));

        const StudentSweep sw = sweep_students(cfg, teacher, cfg.models.reparams.front(), rec.seed);
        rec.max_student_abscissa = -std::numeric_limits<Scalar>::infinity();
        for (const StudentRecord& st : sw.students)
          rec.max_student_abscissa = st.params ? std::max(rec.max_student_abscissa, st.abscissa)
                                               : std::numeric_limits<Scalar>::infinity();
        // Approximation is judged on the largest student.
        const StudentRecord& big = sw.students.back();
        rec.relative_val_loss = big.target_mean_square > 0 ? big.final_val_loss / big.target_mean_square
                                                           : big.final_val_loss;
        rec.approx_ok = big.params.has_value() && rec.relative_val_loss <= fs.approx_tol;
        if (sw.estimate) {
          rec.stable = sw.estimate->verdict == Verdict::Stable;
          rec.beta0_hat = sw.estimate->beta0_hat;
        }
        for (const StudentRecord& st : sw.students)
          if (!st.failure.empty()) rec.failure = "student m=" + std::to_string(st.m) + " diverged";
      } catch (const std::exception& e) {
        rec.failure = e.what();
      }
      r.teachers.push_back(std::move(rec));
    }
  }

  Report& rep = r.report;
  rep.config = cfg;
  Table t{"filter",
          {"teacher", "seed", "target_abscissa", "abscissa", "decay_class", "decay_rate", "relative_val_loss",
           "approx_ok", "beta0_hat", "stable", "max_student_abscissa", "kept", "failure"},
          {}};
  std::size_t kept = 0;
  for (const TeacherRecord& x : r.teachers) {
    kept += x.kept();
    t.add({fmt(x.index), std::to_string(x.seed), fmt(x.target_abscissa), fmt(x.abscissa), to_string(x.decay.tag),
           fmt(x.decay.rate), fmt(x.relative_val_loss), x.approx_ok ? "true" : "false", fmt(x.beta0_hat),
           x.stable ? "true" : "false", fmt(x.max_student_abscissa), x.kept() ? "true" : "false",
           x.failure.empty() ? "" : "failed"});
  }
  rep.tables.push_back(std::move(t));
  rep.tables.push_back(std::move(curves));
  if (!chart.series.empty()) rep.charts.push_back(std::move(chart));
  rep.summary = {{"teachers", r.teachers.size()},
                 {"kept", kept},
                 {"teacher_m", fs.teacher_m},
                 {"student_reparam", to_string(cfg.models.reparams.front())},
                 {"approx_ok", "largest student val loss <= approx_tol * mean(y^2)"}};
  return r;
}

}  // namespace memlab
