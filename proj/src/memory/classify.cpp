#include "memlab/memory/classify.hpp"

#include <cmath>
#include <vector>

namespace memlab {

const char* to_string(DecayTag tag) noexcept {
  switch (tag) {
    case DecayTag::Exponential: return "exponential";
    case DecayTag::Polynomial: return "polynomial";
    case DecayTag::NonDecaying: return "non_decaying";
  }
  return "?";
}

namespace {

struct LineFit {
  Scalar slope = 0;
  Scalar r2 = 0;
};

LineFit fit_line(const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  const auto n = static_cast<Scalar>(x.size());
  Scalar mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  Scalar sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxx > 0 ? sxy / sxx : 0;
  // A perfectly flat log-curve is explained exactly by a zero slope.
  f.r2 = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return f;
}

}  // namespace

DecayClass classify_decay(const MemoryCurve& curve, const ClassifyOptions& opts) {
  DecayClass out;
  std::vector<std::size_t> live;
  for (Eigen::Index i = 0; i < curve.values.size(); ++i)
    if (curve.values(i) > opts.noise_floor) live.push_back(static_cast<std::size_t>(i));

  const auto tail_n = static_cast<std::size_t>(std::floor(opts.tail_fraction * static_cast<Scalar>(live.size())));
  if (tail_n < opts.min_tail_samples) {
    // Too little signal above the noise floor: the curve has already decayed.
    out.tag = DecayTag::Exponential;
    out.rate = out.exp_rate = std::numeric_limits<Scalar>::infinity();
    out.below_noise = true;
    return out;
  }

  std::vector<Scalar> t, logt, logm;
  Scalar tail_mean = 0;
  for (std::size_t j = live.size() - tail_n; j < live.size(); ++j) {
    const std::size_t i = live[j];
    const Scalar ti = curve.grid.time(i);
    const Scalar v = curve.values(static_cast<Eigen::Index>(i));
    t.push_back(ti);
    logt.push_back(std::log1p(ti));
    logm.push_back(std::log(v));
    tail_mean += v;
  }
  tail_mean /= static_cast<Scalar>(tail_n);
  out.window_start = t.front();
  out.window_end = t.back();
  out.window_samples = tail_n;

  const LineFit e = fit_line(t, logm);
  const LineFit p = fit_line(logt, logm);
  out.exp_rate = -e.slope;
  out.poly_rate = -p.slope;
  out.r2_exp = e.r2;
  out.r2_poly = p.r2;

  const Scalar peak = curve.values.maxCoeff();
  const bool flat = tail_mean > opts.nondecaying_mean_ratio * peak;
  const bool unexplained = e.r2 < opts.min_r2 && p.r2 < opts.min_r2;
  const bool growing = !(e.slope < 0);
  if (flat || unexplained || growing) {
    out.tag = DecayTag::NonDecaying;
    return out;
  }
  if (e.r2 >= p.r2) {
    out.tag = DecayTag::Exponential;
    out.rate = out.exp_rate;
  } else {
    out.tag = DecayTag::Polynomial;
    out.rate = out.poly_rate;
  }
  return out;
}

}  // namespace memlab
