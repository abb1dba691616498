// Command-line driver: every subcommand reads a JSON experiment config and
// writes CSV, JSON metadata and SVG into the output directory.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "memlab/approx.hpp"
#include "memlab/core/errors.hpp"
#include "memlab/harness.hpp"
#include "memlab/linalg/spectral.hpp"
#include "memlab/memory.hpp"
#include "memlab/train.hpp"

using namespace memlab;

namespace {

enum Exit { kOk = 0, kConfig = 2, kNumeric = 3, kIo = 4 };

struct Common {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
};

void add_common(CLI::App* sub, Common& c, bool config_required = true) {
  auto* opt = sub->add_option("--config", c.config, "experiment config (JSON)");
  if (config_required) opt->required()->check(CLI::ExistingFile);
  sub->add_option("--out", c.out, "output directory (overrides out_dir)");
  sub->add_option("--seed", c.seed, "base seed (overrides seed)");
  sub->add_option("--threads", c.threads, "worker threads (overrides threads)");
}

ExperimentConfig load(const Common& c) {
  ExperimentConfig cfg = load_experiment_config(c.config);
  if (c.seed) cfg.seed = *c.seed;
  if (c.threads) cfg.threads = *c.threads;
  if (!c.out.empty()) cfg.out_dir = c.out;
  return cfg;
}

void write(const Report& r, const ExperimentConfig& cfg) {
  for (const auto& path : emit_report(r, cfg.out_dir)) std::cout << path << "\n";
  std::cout << r.summary.dump(2) << "\n";
}

void require(const ExperimentConfig& cfg, std::initializer_list<ExperimentKind> kinds, const char* cmd) {
  for (ExperimentKind k : kinds)
    if (cfg.experiment == k) return;
  throw ConfigError(std::string(cmd) + ": config experiment '" + to_string(cfg.experiment) + "' is not handled here");
}

Report probe_report(const ExperimentConfig& cfg, const std::string& kind, const std::string& norm, Scalar t_end,
                    Scalar dt) {
  const FunctionalTarget target = cfg.target.make();
  const TimeGrid grid(0, t_end, dt);
  const MemoryCurve curve = probe_memory(target, probe_kind_from_string(kind.c_str()), default_amplitudes(),
                                         grid, normalization_from_string(norm.c_str()));
  const DecayClass dc = classify_decay(curve);
  Report r;
  r.config = cfg;
  Table t{"memory", {"t", "value"}, {}};
  Chart ch{"memory", "Memory of " + cfg.target.describe() + " (" + kind + " probe)", "t", "memory", false, true,
           {{kind, {}, {}}}};
  for (std::size_t k = 0; k < grid.size(); ++k) {
    t.add({fmt(grid[k]), fmt(curve.values(static_cast<Eigen::Index>(k)))});
    ch.series[0].x.push_back(grid[k]);
    ch.series[0].y.push_back(curve.values(static_cast<Eigen::Index>(k)));
  }
  r.tables.push_back(std::move(t));
  r.charts.push_back(std::move(ch));
  r.summary = {{"target", cfg.target.describe()}, {"probe", kind},         {"normalization", norm},
               {"dt", dt},                        {"decay_class", to_string(dc.tag)},
               {"rate", fmt(dc.rate)},            {"r2_exp", dc.r2_exp}, {"r2_poly", dc.r2_poly}};
  return r;
}

Report fit_report(const ExperimentConfig& cfg) {
  const MemoryKernel rho = cfg.target.kernel();
  const TimeGrid grid = cfg.sweep.error_grid.grid();
  Report r;
  r.config = cfg;
  Table fits{"fits", {"m", "mode", "rate", "residual", "l1_error"}, {}};
  Table coef{"coefficients", {"m", "k", "exponent", "coefficient"}, {}};
  Chart ch{"fits", "Exponential-sum fits of " + rho.describe(), "t", "rho(t)", false, true, {}};
  Series target{"target", {}, {}};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    target.x.push_back(grid[i]);
    target.y.push_back(rho(grid[i]).cwiseAbs().sum());
  }
  ch.series.push_back(std::move(target));
  for (std::size_t m : cfg.models.ms) {
    const ExpSumFit f = fit_exponential_sum(rho, m, grid, cfg.models.basis, cfg.models.basis_rate);
    fits.add({fmt(m), to_string(f.model.mode), fmt(f.model.rate), fmt(f.residual),
              fmt(linear_L1_error(rho, f.model.to_rnn(), grid))});
    const Vector ex = f.model.exponents();
    for (std::size_t k = 0; k < m; ++k)
      coef.add({fmt(m), fmt(k + 1), fmt(ex(static_cast<Eigen::Index>(k))),
                fmt(f.model.coefficients(static_cast<Eigen::Index>(k)))});
    Series s{"m = " + std::to_string(m), {}, {}};
    for (std::size_t i = 0; i < grid.size(); ++i) {
      s.x.push_back(grid[i]);
      s.y.push_back(std::abs(f.model(grid[i])));
    }
    ch.series.push_back(std::move(s));
  }
  r.tables.push_back(std::move(fits));
  r.tables.push_back(std::move(coef));
  r.charts.push_back(std::move(ch));
  r.summary = {{"target", rho.describe()}, {"basis", to_string(cfg.models.basis)}, {"rate", cfg.models.basis_rate}};
  return r;
}

Report train_report(const ExperimentConfig& cfg) {
  const FunctionalTarget target = cfg.target.make();
  Report r;
  r.config = cfg;
  Table hist{"history", {"m", "reparam", "epoch", "train_loss", "val_loss"}, {}};
  Table fin{"students", {"m", "reparam", "epochs", "final_val_loss", "eval_error", "abscissa", "status"}, {}};
  Chart ch{"history", "Validation loss, " + cfg.target.describe(), "epoch", "validation MSE", false, true, {}};
  for (ReparamKind kind : cfg.models.reparams)
    for (std::size_t m : cfg.models.ms) {
      const TrainConfig tc = cfg.train_for(m, kind);
      Series s{std::string(to_string(kind)) + " m = " + std::to_string(m), {}, {}};
      auto log = [&](const std::vector<EpochRecord>& h) {
        for (const auto& e : h) {
          hist.add({fmt(m), to_string(kind), fmt(e.epoch), fmt(e.train_loss), fmt(e.val_loss)});
          s.x.push_back(static_cast<Scalar>(e.epoch));
          s.y.push_back(e.val_loss);
        }
      };
      try {
        const TrainResult res = train_rnn(target, tc);
        log(res.history);
        fin.add({fmt(m), to_string(kind), fmt(res.history.size()), fmt(res.final_val_loss()), fmt(res.eval_error),
                 fmt(spectral_abscissa(res.params.W()).abscissa), res.converged ? "converged" : "budget"});
      } catch (const TrainingDiverged& e) {
        log(e.history);
        fin.add({fmt(m), to_string(kind), fmt(e.history.size()), "inf", "inf", "nan", "diverged"});
      }
      ch.series.push_back(std::move(s));
    }
  r.tables.push_back(std::move(hist));
  r.tables.push_back(std::move(fin));
  r.charts.push_back(std::move(ch));
  r.summary = {{"target", cfg.target.describe()}, {"activation", cfg.models.activation}};
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"memlab: memory, approximation and stability experiments for recurrent models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Common common;
  std::string probe_kind = "heaviside";
  std::string probe_norm = "inf_norm";
  Scalar probe_t_end = 10;
  Scalar probe_dt = 0.01;
  std::string verify_dir;

  auto* probe = app.add_subcommand("probe", "memory curve of the config's target");
  add_common(probe, common);
  probe->add_option("--kind", probe_kind, "heaviside | impulse | reversed");
  probe->add_option("--normalization", probe_norm, "inf_norm | inf_norm_plus_one");
  probe->add_option("--t-end", probe_t_end, "probe horizon");
  probe->add_option("--dt", probe_dt, "probe grid step");
  auto* fit = app.add_subcommand("fit-linear", "exponential-sum fits of the config's kernel");
  add_common(fit, common);
  auto* train = app.add_subcommand("train", "train students for each m and reparameterization");
  add_common(train, common);
  auto* sweep = app.add_subcommand("sweep", "linear, nonlinear or reparameterization sweep");
  add_common(sweep, common);
  auto* filter = app.add_subcommand("filter", "teacher filtering experiment");
  add_common(filter, common);
  auto* demo = app.add_subcommand("demo-periodic", "periodic-memory demo for W = [1 1; -4 -3]");
  add_common(demo, common, false);
  auto* equiv = app.add_subcommand("equivalence", "Heaviside vs impulse memory study");
  add_common(equiv, common);
  auto* report = app.add_subcommand("report", "run whichever experiment the config names");
  add_common(report, common);
  auto* verify = app.add_subcommand("verify", "check config hashes of an output directory");
  verify->add_option("dir", verify_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      const VerifyResult v = verify_report(verify_dir);
      for (const auto& p : v.problems) std::cerr << p << "\n";
      std::cout << v.files_checked << " files checked, " << v.problems.size() << " problems\n";
      if (v.files_checked == 0) throw IoError("no report files in " + verify_dir);
      return v.ok() ? kOk : kIo;
    }
    ExperimentConfig cfg;
    if (*demo && common.config.empty()) {
      cfg.experiment = ExperimentKind::PeriodicDemo;
      if (!common.out.empty()) cfg.out_dir = common.out;
    } else {
      cfg = load(common);
    }

    Report r;
    if (*probe) {
      r = probe_report(cfg, probe_kind, probe_norm, probe_t_end, probe_dt);
    } else if (*fit) {
      r = fit_report(cfg);
    } else if (*train) {
      r = train_report(cfg);
    } else if (*sweep) {
      require(cfg, {ExperimentKind::LinearSweep, ExperimentKind::NonlinearSweep, ExperimentKind::ReparamComparison},
              "sweep");
      r = run_experiment(cfg);
    } else if (*filter) {
      require(cfg, {ExperimentKind::FilterTeachers}, "filter");
      r = run_experiment(cfg);
    } else if (*demo) {
      require(cfg, {ExperimentKind::PeriodicDemo}, "demo-periodic");
      r = run_experiment(cfg);
    } else if (*equiv) {
      require(cfg, {ExperimentKind::EquivalenceStudy}, "equivalence");
      r = run_experiment(cfg);
    } else {
      r = run_experiment(cfg);
    }
    write(r, cfg);
    return kOk;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  }
}
