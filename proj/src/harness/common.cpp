#include "common.hpp"

#include <cmath>

namespace memlab::detail {

Table sweep_csv_table(const SweepTable& t, const std::string& name) {
  Table out{name, {"m", "beta", "error", "n_samples", "abscissa"}, {}};
  for (std::size_t i = 0; i < t.ms.size(); ++i)
    for (std::size_t j = 0; j < t.betas.size(); ++j)
      out.add({fmt(t.ms[i]), fmt(t.betas[j]), fmt(t.errors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))),
               fmt(t.n_samples), fmt(t.abscissa[i])});
  return out;
}

Table stability_table(const SweepTable& t, const StabilityEstimate& e, const std::string& name) {
  Table out{name, {"m", "base_error", "abscissa", "crossing"}, {}};
  for (std::size_t i = 0; i < t.ms.size(); ++i) {
    // crossings[k] belongs to the (k+1)-th smallest m.
    Scalar cross = std::nan("");
    for (std::size_t k = 0; k < e.crossings.size(); ++k)
      if (e.ms_used[k + 1] == t.ms[i]) cross = e.crossings[k];
    out.add({fmt(t.ms[i]), fmt(t.base_error[i]), fmt(t.abscissa[i]), fmt(cross)});
  }
  return out;
}

Chart sweep_chart(const SweepTable& t, const std::string& name, const std::string& title) {
  Chart c{name, title, "perturbation radius beta", "perturbation error E_m(beta)", true, true, {}};
  for (std::size_t i = 0; i < t.ms.size(); ++i) {
    Series s{"m = " + std::to_string(t.ms[i]), {}, {}};
    for (std::size_t j = 0; j < t.betas.size(); ++j) {
      s.x.push_back(t.betas[j]);
      s.y.push_back(t.errors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    }
    c.series.push_back(std::move(s));
  }
  return c;
}

nlohmann::json estimate_json(const StabilityEstimate& e) {
  nlohmann::json cross = nlohmann::json::array();
  for (Scalar x : e.crossings) cross.push_back(fmt(x));
  return {{"verdict", to_string(e.verdict)},
          {"beta0_hat", e.beta0_hat},
          {"kappa", std::isinf(e.kappa) ? nlohmann::json("inf") : nlohmann::json(e.kappa)},
          {"eps_floor", e.eps_floor},
          {"ms", e.ms_used},
          {"crossings", cross},
          {"crossings_shift_left", e.crossings_shift_left},
          {"criterion", "kappa-inflation prefix and crossing-shift surrogate for continuity of E(beta)"}};
}

}  // namespace memlab::detail
