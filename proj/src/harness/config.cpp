#include "memlab/harness/config.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "memlab/core/errors.hpp"
#include "memlab/stability/sweep.hpp"

namespace memlab {

using nlohmann::json;

const char* to_string(ExperimentKind k) noexcept {
  switch (k) {
    case ExperimentKind::LinearSweep: return "linear_sweep";
    case ExperimentKind::NonlinearSweep: return "nonlinear_sweep";
    case ExperimentKind::ReparamComparison: return "reparam_comparison";
    case ExperimentKind::FilterTeachers: return "filter_teachers";
    case ExperimentKind::PeriodicDemo: return "periodic_demo";
    case ExperimentKind::EquivalenceStudy: return "equivalence_study";
  }
  return "?";
}

ExperimentKind experiment_from_string(const std::string& name) {
  for (auto k : {ExperimentKind::LinearSweep, ExperimentKind::NonlinearSweep, ExperimentKind::ReparamComparison,
                 ExperimentKind::FilterTeachers, ExperimentKind::PeriodicDemo, ExperimentKind::EquivalenceStudy})
    if (name == to_string(k)) return k;
  throw ConfigError("unknown experiment: " + name);
}

MemoryKernel TargetSpec::kernel() const {
  if (family == "exp") return MemoryKernel::exp_decay(parameter);
  if (family == "poly") return MemoryKernel::poly_decay(parameter);
  if (family == "table") return MemoryKernel::load_csv(table);
  throw ConfigError("unknown kernel family: " + family);
}

FunctionalTarget TargetSpec::make() const {
  if (functional == "linear") return make_linear_target(kernel());
  if (functional == "tanh") return make_nonlinear_target(kernel());
  throw ConfigError("unknown target functional: " + functional);
}

std::string TargetSpec::describe() const {
  const std::string k = kernel().describe();
  return functional == "tanh" ? "tanh(" + k + ")" : k;
}

std::vector<Scalar> SweepSpec::resolved_betas() const {
  if (beta_grid == "linear") return linear_beta_grid();
  if (beta_grid == "nonlinear") return nonlinear_beta_grid();
  if (beta_grid == "custom") return betas;
  throw ConfigError("unknown beta grid: " + beta_grid);
}

TrainConfig ExperimentConfig::train_for(std::size_t m, ReparamKind kind) const {
  TrainConfig t = train;
  t.m = m;
  t.activation = models.activation;
  t.reparam = kind;
  t.seed = seed;
  return t;
}

void ExperimentConfig::validate() const {
  try {
    (void)Activation::from_string(models.activation);
    if (experiment != ExperimentKind::PeriodicDemo && experiment != ExperimentKind::EquivalenceStudy &&
        experiment != ExperimentKind::FilterTeachers)
      (void)target.kernel();
    if (target.functional != "linear" && target.functional != "tanh")
      throw ConfigError("unknown target functional: " + target.functional);
    const auto betas = sweep.resolved_betas();
    for (std::size_t j = 1; j < betas.size(); ++j)
      if (!(betas[j] > betas[j - 1])) throw ConfigError("sweep: betas must be increasing");
    if (sweep.n_samples == 0) throw ConfigError("sweep: n_samples must be positive");
    (void)sweep.error_grid.grid();
    (void)filter.probe_grid.grid();
    (void)equivalence.probe_grid.grid();
    if (!(periodic.dt > 0) || !(periodic.t_end > 0)) throw ConfigError("periodic: dt and t_end must be positive");
    for (std::size_t m : models.ms)
      if (m == 0) throw ConfigError("models: hidden sizes must be positive");
    train_for(models.ms.empty() ? 1 : models.ms.front(), ReparamKind::Direct).validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

namespace {

json grid_json(const GridSpec& g) { return json{{"t_start", g.t_start}, {"t_end", g.t_end}, {"dt", g.dt}}; }

GridSpec grid_from(const json& j) {
  GridSpec g;
  for (const auto& [k, v] : j.items()) {
    if (k == "t_start") g.t_start = v.get<Scalar>();
    else if (k == "t_end") g.t_end = v.get<Scalar>();
    else if (k == "dt") g.dt = v.get<Scalar>();
    else throw ConfigError("unknown grid key: " + k);
  }
  return g;
}

template <class F>
void each_key(const json& j, const char* where, F&& f) {
  if (!j.is_object()) throw ConfigError(std::string(where) + " must be an object");
  for (const auto& [k, v] : j.items())
    if (!f(k, v)) throw ConfigError(std::string("unknown key in ") + where + ": " + k);
}

}  // namespace

json to_json(const ExperimentConfig& c) {
  json reparams = json::array();
  for (auto k : c.models.reparams) reparams.push_back(to_string(k));
  json train = json::parse(train_config_to_json(c.train));
  for (const char* k : {"schema_version", "m", "activation", "reparam", "seed"}) train.erase(k);
  return json{
      {"schema_version", ExperimentConfig::kSchemaVersion},
      {"experiment", to_string(c.experiment)},
      {"seed", c.seed},
      {"target",
       {{"functional", c.target.functional},
        {"family", c.target.family},
        {"parameter", c.target.parameter},
        {"table", c.target.table}}},
      {"models",
       {{"ms", c.models.ms},
        {"activation", c.models.activation},
        {"reparams", reparams},
        {"basis", to_string(c.models.basis)},
        {"basis_rate", c.models.basis_rate}}},
      {"sweep",
       {{"beta_grid", c.sweep.beta_grid},
        {"betas", c.sweep.betas},
        {"n_samples", c.sweep.n_samples},
        {"kappa", c.sweep.kappa},
        {"eps_floor", c.sweep.eps_floor},
        {"error_grid", grid_json(c.sweep.error_grid)},
        {"random_probes", c.sweep.random_probes}}},
      {"train", train},
      {"filter",
       {{"abscissae", c.filter.abscissae},
        {"teachers_per_abscissa", c.filter.teachers_per_abscissa},
        {"teacher_m", c.filter.teacher_m},
        {"approx_tol", c.filter.approx_tol},
        {"probe_grid", grid_json(c.filter.probe_grid)}}},
      {"equivalence",
       {{"repeats", c.equivalence.repeats},
        {"m", c.equivalence.m},
        {"rnn", c.equivalence.rnn},
        {"gru", c.equivalence.gru},
        {"abscissa_min", c.equivalence.abscissa_min},
        {"abscissa_max", c.equivalence.abscissa_max},
        {"probe_grid", grid_json(c.equivalence.probe_grid)}}},
      {"periodic",
       {{"ring", c.periodic.ring},
        {"ring_radii", c.periodic.ring_radii},
        {"t_end", c.periodic.t_end},
        {"dt", c.periodic.dt},
        {"bisection_steps", c.periodic.bisection_steps},
        {"settle_time", c.periodic.settle_time}}},
  };
}

ExperimentConfig experiment_config_from_json(const json& j) {
  ExperimentConfig c;
  try {
    each_key(j, "config", [&](const std::string& k, const json& v) {
      if (k == "schema_version") {
        if (v.get<int>() != ExperimentConfig::kSchemaVersion)
          throw ConfigError("unsupported schema_version " + v.dump());
      } else if (k == "experiment") {
        c.experiment = experiment_from_string(v.get<std::string>());
      } else if (k == "seed") {
        c.seed = v.get<std::uint64_t>();
      } else if (k == "out_dir") {
        c.out_dir = v.get<std::string>();
      } else if (k == "threads") {
        c.threads = v.get<unsigned>();
      } else if (k == "target") {
        each_key(v, "target", [&](const std::string& a, const json& b) {
          if (a == "functional") c.target.functional = b.get<std::string>();
          else if (a == "family") c.target.family = b.get<std::string>();
          else if (a == "parameter") c.target.parameter = b.get<Scalar>();
          else if (a == "table") c.target.table = b.get<std::string>();
          else return false;
          return true;
        });
      } else if (k == "models") {
        each_key(v, "models", [&](const std::string& a, const json& b) {
          if (a == "ms") c.models.ms = b.get<std::vector<std::size_t>>();
          else if (a == "activation") c.models.activation = b.get<std::string>();
          else if (a == "reparams") {
            c.models.reparams.clear();
            for (const auto& r : b) c.models.reparams.push_back(reparam_from_string(r.get<std::string>()));
          } else if (a == "basis") {
            const auto s = b.get<std::string>();
            if (s == "standard") c.models.basis = ExpSumMode::Standard;
            else if (s == "rescaled") c.models.basis = ExpSumMode::Rescaled;
            else throw ConfigError("unknown basis: " + s);
          } else if (a == "basis_rate") c.models.basis_rate = b.get<Scalar>();
          else return false;
          return true;
        });
      } else if (k == "sweep") {
        each_key(v, "sweep", [&](const std::string& a, const json& b) {
          if (a == "beta_grid") c.sweep.beta_grid = b.get<std::string>();
          else if (a == "betas") c.sweep.betas = b.get<std::vector<Scalar>>();
          else if (a == "n_samples") c.sweep.n_samples = b.get<std::size_t>();
          else if (a == "kappa") c.sweep.kappa = b.get<Scalar>();
          else if (a == "eps_floor") c.sweep.eps_floor = b.get<Scalar>();
          else if (a == "error_grid") c.sweep.error_grid = grid_from(b);
          else if (a == "random_probes") c.sweep.random_probes = b.get<std::size_t>();
          else return false;
          return true;
        });
      } else if (k == "train") {
        if (!v.is_object()) throw ConfigError("train must be an object");
        for (const char* key : {"m", "activation", "reparam"})
          if (v.contains(key)) throw ConfigError(std::string("train.") + key + " is set per model under models");
        if (v.contains("seed")) throw ConfigError("train.seed is the experiment seed");
        c.train = train_config_from_json(v.dump());
      } else if (k == "filter") {
        each_key(v, "filter", [&](const std::string& a, const json& b) {
          if (a == "abscissae") c.filter.abscissae = b.get<std::vector<Scalar>>();
          else if (a == "teachers_per_abscissa") c.filter.teachers_per_abscissa = b.get<std::size_t>();
          else if (a == "teacher_m") c.filter.teacher_m = b.get<std::size_t>();
          else if (a == "approx_tol") c.filter.approx_tol = b.get<Scalar>();
          else if (a == "probe_grid") c.filter.probe_grid = grid_from(b);
          else return false;
          return true;
        });
      } else if (k == "equivalence") {
        each_key(v, "equivalence", [&](const std::string& a, const json& b) {
          if (a == "repeats") c.equivalence.repeats = b.get<std::size_t>();
          else if (a == "m") c.equivalence.m = b.get<std::size_t>();
          else if (a == "rnn") c.equivalence.rnn = b.get<bool>();
          else if (a == "gru") c.equivalence.gru = b.get<bool>();
          else if (a == "abscissa_min") c.equivalence.abscissa_min = b.get<Scalar>();
          else if (a == "abscissa_max") c.equivalence.abscissa_max = b.get<Scalar>();
          else if (a == "probe_grid") c.equivalence.probe_grid = grid_from(b);
          else return false;
          return true;
        });
      } else if (k == "periodic") {
        each_key(v, "periodic", [&](const std::string& a, const json& b) {
          if (a == "ring") c.periodic.ring = b.get<std::size_t>();
          else if (a == "ring_radii") c.periodic.ring_radii = b.get<std::vector<Scalar>>();
          else if (a == "t_end") c.periodic.t_end = b.get<Scalar>();
          else if (a == "dt") c.periodic.dt = b.get<Scalar>();
          else if (a == "bisection_steps") c.periodic.bisection_steps = b.get<std::size_t>();
          else if (a == "settle_time") c.periodic.settle_time = b.get<Scalar>();
          else return false;
          return true;
        });
      } else {
        return false;
      }
      return true;
    });
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return experiment_config_from_json(json::parse(ss.str()));
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

std::string config_hash(const ExperimentConfig& cfg) { return fnv1a_hex(to_json(cfg).dump()); }

}  // namespace memlab
