#pragma once

// Internal fixed-step integrators shared by the RNN and GRU drivers.

#include <cstddef>
#include <string>

#include "memlab/core/errors.hpp"
#include "memlab/core/signal.hpp"
#include "memlab/dynamics/trajectory.hpp"

namespace memlab::detail {

// f(h, x) -> dh/dt. Fills a trajectory over x.grid, h = 0 up to the onset.
template <typename Rhs>
Trajectory rk4_zoh(const Rhs& f, Eigen::Index m, const Vector& c, const Signal& x, const char* who) {
  const std::size_t n = x.size();
  const Scalar dt = x.grid.dt();
  const std::size_t k0 = x.onset();
  Trajectory tr{x.grid, Matrix::Zero(m, static_cast<Eigen::Index>(n)), Matrix::Zero(m, static_cast<Eigen::Index>(n)),
                Vector::Zero(static_cast<Eigen::Index>(n)), Vector::Zero(static_cast<Eigen::Index>(n))};
  Vector h = Vector::Zero(m);
  for (std::size_t k = 0; k < n; ++k) {
    const auto col = static_cast<Eigen::Index>(k);
    const Vector xk = x.at(k);
    const Vector v = f(h, xk);
    tr.h.col(col) = h;
    tr.v.col(col) = v;
    if (k + 1 == n) break;
    if (k < k0) continue;
    const Vector k1 = v;
    const Vector k2 = f(h + 0.5 * dt * k1, xk);
    const Vector k3 = f(h + 0.5 * dt * k2, xk);
    const Vector k4 = f(h + dt * k3, xk);
    h += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!h.allFinite()) throw DivergenceError(std::string(who) + ": hidden state diverged", k + 1);
  }
  tr.y = tr.h.transpose() * c;
  tr.dy = tr.v.transpose() * c;
  return tr;
}

}  // namespace memlab::detail
