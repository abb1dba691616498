#include "memlab/train/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "memlab/core/errors.hpp"

namespace memlab {

using nlohmann::json;

void TrainConfig::validate() const {
  if (m == 0 || d == 0) throw ConfigError("train: m and d must be positive");
  if (n_train == 0 || n_test == 0) throw ConfigError("train: n_train and n_test must be positive");
  if (batch == 0) throw ConfigError("train: batch must be positive");
  if (!(lr > 0)) throw ConfigError("train: lr must be positive");
  if (!(stop_loss >= 0)) throw ConfigError("train: stop_loss must be nonnegative");
  try {
    const TimeGrid g = train_grid.grid();
    (void)eval_grid.grid();
    (void)Activation::from_string(activation);
    if (g.t_start() < g.dt() * 0.5) throw ConfigError("train: train grid must start at t >= dt");
  } catch (const DomainError& e) {
    throw ConfigError(std::string("train: ") + e.what());
  }
}

namespace {

json grid_to_json(const GridSpec& g) { return json{{"t_start", g.t_start}, {"t_end", g.t_end}, {"dt", g.dt}}; }

GridSpec grid_from_json(const json& j) {
  GridSpec g;
  for (const auto& [k, v] : j.items()) {
    if (k == "t_start") g.t_start = v.get<Scalar>();
    else if (k == "t_end") g.t_end = v.get<Scalar>();
    else if (k == "dt") g.dt = v.get<Scalar>();
    else throw ConfigError("unknown grid key: " + k);
  }
  return g;
}

}  // namespace

TrainConfig train_config_from_json(const std::string& text) {
  TrainConfig c;
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw ConfigError("train config must be a JSON object");
    for (const auto& [k, v] : j.items()) {
      if (k == "train_grid") c.train_grid = grid_from_json(v);
      else if (k == "eval_grid") c.eval_grid = grid_from_json(v);
      else if (k == "n_train") c.n_train = v.get<std::size_t>();
      else if (k == "n_test") c.n_test = v.get<std::size_t>();
      else if (k == "batch") c.batch = v.get<std::size_t>();
      else if (k == "lr") c.lr = v.get<Scalar>();
      else if (k == "max_epochs") c.max_epochs = v.get<std::size_t>();
      else if (k == "stop_loss") c.stop_loss = v.get<Scalar>();
      else if (k == "seed") c.seed = v.get<std::uint64_t>();
      else if (k == "activation") c.activation = v.get<std::string>();
      else if (k == "reparam") c.reparam = reparam_from_string(v.get<std::string>());
      else if (k == "m") c.m = v.get<std::size_t>();
      else if (k == "d") c.d = v.get<std::size_t>();
      else if (k == "input_scale") c.input_scale = v.get<Scalar>();
      else if (k == "eval_random_probes") c.eval_random_probes = v.get<std::size_t>();
      else if (k == "compute_eval_error") c.compute_eval_error = v.get<bool>();
      else if (k == "schema_version") continue;
      else throw ConfigError("unknown train config key: " + k);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("train config: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(std::string("train config: ") + e.what());
  }
  c.validate();
  return c;
}

std::string train_config_to_json(const TrainConfig& c) {
  json j{{"schema_version", 1},
         {"train_grid", grid_to_json(c.train_grid)},
         {"eval_grid", grid_to_json(c.eval_grid)},
         {"n_train", c.n_train},
         {"n_test", c.n_test},
         {"batch", c.batch},
         {"lr", c.lr},
         {"max_epochs", c.max_epochs},
         {"stop_loss", c.stop_loss},
         {"seed", c.seed},
         {"activation", c.activation},
         {"reparam", to_string(c.reparam)},
         {"m", c.m},
         {"d", c.d},
         {"input_scale", c.input_scale},
         {"eval_random_probes", c.eval_random_probes},
         {"compute_eval_error", c.compute_eval_error}};
  return j.dump(2);
}

TrainConfig load_train_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return train_config_from_json(ss.str());
}

}  // namespace memlab
