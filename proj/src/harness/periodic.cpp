#include <cmath>
#include <numbers>

#include "memlab/core/errors.hpp"
#include "memlab/harness/experiments.hpp"

namespace memlab {
namespace {

Vector v_rhs(const Matrix& W, const Vector& v) {
  return (1.0 - v.array().square()).matrix().cwiseProduct(W * v);
}

bool settles_to_origin(const Matrix& W, Scalar r, const PeriodicSpec& ps) {
  const Matrix p = integrate_v_dynamics(W, Vector::Constant(2, r), ps.settle_time, ps.dt);
  return p.col(p.cols() - 1).norm() < 1e-3;
}

}  // namespace

Matrix integrate_v_dynamics(const Matrix& W, const Vector& v0, Scalar t_end, Scalar dt) {
  if (W.rows() != W.cols() || W.rows() != v0.size()) throw DomainError("v-dynamics: shape mismatch");
  if (!(dt > 0) || !(t_end >= 0)) throw DomainError("v-dynamics: need dt > 0 and t_end >= 0");
  const auto n = static_cast<Eigen::Index>(std::llround(t_end / dt)) + 1;
  Matrix path(v0.size(), n);
  Vector v = v0;
  path.col(0) = v;
  for (Eigen::Index k = 1; k < n; ++k) {
    const Vector k1 = v_rhs(W, v);
    const Vector k2 = v_rhs(W, v + 0.5 * dt * k1);
    const Vector k3 = v_rhs(W, v + 0.5 * dt * k2);
    const Vector k4 = v_rhs(W, v + dt * k3);
    v += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!v.allFinite()) throw DivergenceError("v-dynamics: non-finite state", static_cast<std::size_t>(k));
    path.col(k) = v;
  }
  return path;
}

OrbitWitness find_closed_orbit(const Matrix& path, Scalar dt, Scalar tol) {
  if (path.rows() != 2) throw DomainError("find_closed_orbit: path must be 2 x n");
  const Eigen::Index n = path.cols();
  OrbitWitness w;
  if (n == 0) return w;
  std::vector<Scalar> angle(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    Scalar a = std::atan2(path(1, k), path(0, k));
    if (k > 0) {
      const Scalar prev = angle[static_cast<std::size_t>(k - 1)];
      while (a - prev > std::numbers::pi) a -= 2 * std::numbers::pi;
      while (a - prev < -std::numbers::pi) a += 2 * std::numbers::pi;
    }
    angle[static_cast<std::size_t>(k)] = a;
  }
  w.revolutions = (angle.back() - angle.front()) / (2 * std::numbers::pi);
  w.return_distance = std::numeric_limits<Scalar>::infinity();
  for (Eigen::Index j = 1; j < n; ++j) {
    for (Eigen::Index i = 0; i < j; ++i) {
      if (std::abs(angle[static_cast<std::size_t>(j)] - angle[static_cast<std::size_t>(i)]) < 2 * std::numbers::pi)
        continue;
      const Scalar d = (path.col(j) - path.col(i)).norm();
      if (d < tol) {
        w.closed = true;
        w.return_distance = d;
        w.first_time = static_cast<Scalar>(i) * dt;
        w.return_time = static_cast<Scalar>(j) * dt;
        return w;
      }
      w.return_distance = std::min(w.return_distance, d);
    }
  }
  return w;
}

PeriodicDemoResult run_periodic_demo(const ExperimentConfig& cfg) {
  const PeriodicSpec& ps = cfg.periodic;
  PeriodicDemoResult r;
  r.W.resize(2, 2);
  r.W << 1, 1, -4, -3;

  // Basin boundary of the origin along the diagonal.
  Scalar lo = 0.5;
  Scalar hi = 0.99;
  if (!settles_to_origin(r.W, lo, ps) || settles_to_origin(r.W, hi, ps))
    throw NumericFailure("periodic demo: bisection bracket does not straddle the basin boundary");
  for (std::size_t it = 0; it < ps.bisection_steps; ++it) {
    const Scalar mid = 0.5 * (lo + hi);
    (settles_to_origin(r.W, mid, ps) ? lo : hi) = mid;
  }
  r.boundary_radius = lo;
  r.boundary_path = integrate_v_dynamics(r.W, Vector::Constant(2, lo), ps.t_end, ps.dt);
  r.witness = find_closed_orbit(r.boundary_path, ps.dt, 1e-2);

  // Memory read out as |v_1|, the derivative of the first hidden unit.
  const TimeGrid grid = TimeGrid::from_count(0, ps.dt, static_cast<std::size_t>(r.boundary_path.cols()));
  r.boundary_memory = MemoryCurve(grid, r.boundary_path.row(0).cwiseAbs().transpose(), ProbeKind::Heaviside,
                                  {Vector::Constant(2, lo)});
  r.boundary_class = classify_decay(r.boundary_memory);

  for (Scalar radius : ps.ring_radii)
    for (std::size_t k = 0; k < ps.ring; ++k) {
      const Scalar th = 2 * std::numbers::pi * static_cast<Scalar>(k) / static_cast<Scalar>(ps.ring);
      Vector v0(2);
      v0 << radius * std::cos(th), radius * std::sin(th);
      r.ring_paths.push_back(integrate_v_dynamics(r.W, v0, ps.t_end, ps.dt));
    }

  Vector origin = Vector::Zero(2);
  Vector ones = Vector::Ones(2);
  const Scalar origin_drift = (integrate_v_dynamics(r.W, origin, ps.t_end, ps.dt).colwise() - origin)
                                  .colwise().norm().maxCoeff();
  const Scalar ones_drift = (integrate_v_dynamics(r.W, ones, ps.t_end, ps.dt).colwise() - ones)
                                .colwise().norm().maxCoeff();

  Report& rep = r.report;
  rep.config = cfg;
  // Every 10th sample keeps the portrait light.
  constexpr Eigen::Index stride = 10;
  Table portrait{"phase_portrait", {"path", "start_radius", "t", "v1", "v2"}, {}};
  Chart chart{"phase_portrait", "Trajectories of v = dh/dt for W = [1 1; -4 -3]", "v1", "v2", false, false, {}};
  auto add_path = [&](const std::string& id, Scalar radius, const Matrix& p) {
    Series s{id, {}, {}};
    for (Eigen::Index k = 0; k < p.cols(); k += stride) {
      portrait.add({id, fmt(radius), fmt(static_cast<Scalar>(k) * ps.dt), fmt(p(0, k)), fmt(p(1, k))});
      s.x.push_back(p(0, k));
      s.y.push_back(p(1, k));
    }
    chart.series.push_back(std::move(s));
  };
  add_path("boundary", r.boundary_radius, r.boundary_path);
  for (std::size_t i = 0; i < r.ring_paths.size(); ++i)
    add_path("ring" + std::to_string(i), ps.ring_radii[i / ps.ring], r.ring_paths[i]);
  rep.tables.push_back(std::move(portrait));
  rep.charts.push_back(std::move(chart));

  Table mem{"boundary_memory", {"t", "memory"}, {}};
  Chart mchart{"boundary_memory", "Memory |v1(t)| on the basin boundary", "t", "memory", false, true, {}};
  Series ms{"boundary", {}, {}};
  for (std::size_t k = 0; k < grid.size(); k += stride) {
    const Scalar v = r.boundary_memory.values(static_cast<Eigen::Index>(k));
    mem.add({fmt(grid[k]), fmt(v)});
    ms.x.push_back(grid[k]);
    ms.y.push_back(v);
  }
  mchart.series.push_back(std::move(ms));
  rep.tables.push_back(std::move(mem));
  rep.charts.push_back(std::move(mchart));

  rep.summary = {{"W", {{1, 1}, {-4, -3}}},
                 {"boundary_radius", r.boundary_radius},
                 {"decay_class", to_string(r.boundary_class.tag)},
                 {"closed_orbit", r.witness.closed},
                 {"revolutions", r.witness.revolutions},
                 {"return_distance", fmt(r.witness.return_distance)},
                 {"return_time", r.witness.return_time},
                 {"origin_max_drift", origin_drift},
                 {"ones_max_drift", ones_drift}};
  return r;
}

}  // namespace memlab
