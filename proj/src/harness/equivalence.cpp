#include <cmath>
#include <random>

#include "memlab/core/errors.hpp"
#include "memlab/core/random.hpp"
#include "memlab/dynamics/gru.hpp"
#include "memlab/harness/experiments.hpp"
#include "memlab/memory/probe.hpp"
#include "memlab/targets/teacher.hpp"

namespace memlab {

EquivalenceResult run_equivalence_study(const ExperimentConfig& cfg) {
  const EquivalenceSpec& es = cfg.equivalence;
  if (es.repeats == 0) throw DomainError("equivalence study: zero repeats");
  if (!es.rnn && !es.gru) throw DomainError("equivalence study: no model kind selected");
  if (!(es.abscissa_min <= es.abscissa_max) || !(es.abscissa_max < 0))
    throw DomainError("equivalence study: abscissa range must be ordered and negative");
  const TimeGrid grid = es.probe_grid.grid();
  const auto amps = default_amplitudes();

  EquivalenceResult r;
  Table curves{"equivalence_curves", {"model", "repeat", "t", "heaviside", "impulse"}, {}};
  Chart chart{"equivalence_curves", "Heaviside (solid) and impulse memory", "t", "memory", false, true, {}};
  constexpr std::size_t stride = 10;

  auto record = [&](const std::string& model, std::size_t rep, const FunctionalTarget& f) {
    const MemoryCurve h = probe_memory(f, ProbeKind::Heaviside, amps, grid);
    const MemoryCurve i = probe_memory(f, ProbeKind::Impulse, amps, grid);
    EquivalenceRecord e{model, rep, classify_decay(h), classify_decay(i), false, false};
    e.agree = e.heaviside.tag == e.impulse.tag;
    e.rates_close = e.agree && e.heaviside.tag == DecayTag::Exponential &&
                    std::abs(e.heaviside.rate - e.impulse.rate) <= 0.2 * std::abs(e.heaviside.rate);
    r.records.push_back(e);
    if (rep < 3) {
      Series sh{model + " " + std::to_string(rep) + " heaviside", {}, {}};
      Series si{model + " " + std::to_string(rep) + " impulse", {}, {}};
      for (std::size_t k = 0; k < grid.size(); k += stride) {
        sh.x.push_back(grid[k]);
        sh.y.push_back(h.values(static_cast<Eigen::Index>(k)));
        si.x.push_back(grid[k]);
        si.y.push_back(i.values(static_cast<Eigen::Index>(k)));
      }
      chart.series.push_back(std::move(sh));
      chart.series.push_back(std::move(si));
    }
    for (std::size_t k = 0; k < grid.size(); k += stride)
      curves.add({model, fmt(rep), fmt(grid[k]), fmt(h.values(static_cast<Eigen::Index>(k))),
                  fmt(i.values(static_cast<Eigen::Index>(k)))});
  };

  for (std::size_t rep = 0; rep < es.repeats; ++rep) {
    if (es.rnn) {
      Rng rng(derive_seed(cfg.seed, {0x726e6eULL, rep}));
      TeacherSpectrum spec;
      spec.abscissa = std::uniform_real_distribution<Scalar>(es.abscissa_min, es.abscissa_max)(rng);
      record("rnn", rep, make_teacher_rnn(rng(), es.m, spec, Activation::tanh()));
    }
    if (es.gru) {
      Rng rng(derive_seed(cfg.seed, {0x677275ULL, rep}));
      // Variance of the usual U(-1/sqrt(m), 1/sqrt(m)) initialization.
      const Scalar s = 1.0 / std::sqrt(3.0 * static_cast<Scalar>(es.m));
      record("gru", rep, make_gru_target(GruParams::random(rng, es.m, 1, s, s, s)));
    }
  }
  std::size_t agree = 0;
  for (const auto& e : r.records) agree += e.agree;
  r.agreement = static_cast<Scalar>(agree) / static_cast<Scalar>(r.records.size());

  // Linear activation: both probes reduce to |c' e^{Wt} U|.
  {
    TeacherSpectrum spec;
    spec.abscissa = es.abscissa_max;
    const FunctionalTarget lin =
        make_teacher_rnn(derive_seed(cfg.seed, {0x6c696eULL}), es.m, spec, Activation::linear());
    const MemoryCurve h = probe_memory(lin, ProbeKind::Heaviside, amps, grid);
    const MemoryCurve i = probe_memory(lin, ProbeKind::Impulse, amps, grid);
    for (std::size_t k = 0; k < grid.size(); ++k)
      if (grid[k] > 0)
        r.linear_gap = std::max(r.linear_gap, std::abs(h.values(static_cast<Eigen::Index>(k)) -
                                                       i.values(static_cast<Eigen::Index>(k))));
  }

  Report& rp = r.report;
  rp.config = cfg;
  Table t{"equivalence",
          {"model", "repeat", "heaviside_class", "heaviside_rate", "impulse_class", "impulse_rate", "agree",
           "rates_close"},
          {}};
  for (const auto& e : r.records)
    t.add({e.model, fmt(e.repeat), to_string(e.heaviside.tag), fmt(e.heaviside.rate), to_string(e.impulse.tag),
           fmt(e.impulse.rate), e.agree ? "true" : "false", e.rates_close ? "true" : "false"});
  rp.tables.push_back(std::move(t));
  rp.tables.push_back(std::move(curves));
  rp.charts.push_back(std::move(chart));
  rp.summary = {{"records", r.records.size()},
                {"agreement", r.agreement},
                {"linear_gap", r.linear_gap},
                {"grid_dt", grid.dt()},
                {"criterion", "same DecayTag for Heaviside and impulse probes"}};
  return r;
}

Report run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  switch (cfg.experiment) {
    case ExperimentKind::LinearSweep: return run_linear_sweep(cfg).report;
    case ExperimentKind::NonlinearSweep: return run_nonlinear_sweep(cfg).report;
    case ExperimentKind::ReparamComparison: return run_reparam_comparison(cfg).report;
    case ExperimentKind::FilterTeachers: return run_filter_teachers(cfg).report;
    case ExperimentKind::PeriodicDemo: return run_periodic_demo(cfg).report;
    case ExperimentKind::EquivalenceStudy: return run_equivalence_study(cfg).report;
  }
  throw DomainError("unknown experiment kind");
}

}  // namespace memlab
