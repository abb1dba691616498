#include "memlab/dynamics/rnn.hpp"

#include <cmath>

#include "memlab/core/errors.hpp"
#include "ode.hpp"

namespace memlab {

namespace {

void check_shapes(const RnnParams& theta, const Signal& x) {
  theta.validate();
  if (x.dim() != theta.d()) throw DomainError("signal dimension does not match U");
}

}  // namespace

Trajectory integrate_rnn(const RnnParams& theta, const Activation& act, const Signal& x) {
  check_shapes(theta, x);
  const Matrix& W = theta.W();
  auto f = [&](const Vector& h, const Vector& xk) -> Vector {
    return apply_activation(act, W * h + theta.U * xk + theta.b);
  };
  return detail::rk4_zoh(f, static_cast<Eigen::Index>(theta.m()), theta.c, x, "integrate_rnn");
}

Trajectory integrate_rnn(const RnnParams& theta, const Activation& act, const Signal& x, const TimeGrid& grid) {
  return integrate_rnn(theta, act, x).restricted(grid);
}

Trajectory discrete_forward(const RnnParams& theta, const Activation& act, const Signal& x, Scalar dt) {
  check_shapes(theta, x);
  if (!(dt > 0)) throw DomainError("discrete_forward: dt must be positive");
  const Scalar t0 = x.grid.time(x.onset());
  const Scalar span = x.grid.t_end() - t0;
  const auto steps = static_cast<std::size_t>(std::llround(span / dt));
  const TimeGrid g = TimeGrid::from_count(t0, dt, steps + 1);
  const Eigen::Index m = static_cast<Eigen::Index>(theta.m());
  const auto n = static_cast<Eigen::Index>(g.size());

  Trajectory tr{g, Matrix::Zero(m, n), Matrix::Zero(m, n), Vector::Zero(n), Vector::Zero(n)};
  const bool same_grid = std::abs(dt - x.grid.dt()) <= 1e-12 * dt;
  const std::size_t k0 = x.onset();
  Vector h = Vector::Zero(m);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Vector xk = same_grid ? Vector(x.at(k0 + static_cast<std::size_t>(k))) : x.sample(g.time(static_cast<std::size_t>(k)));
    const Vector v = apply_activation(act, theta.W() * h + theta.U * xk + theta.b);
    tr.h.col(k) = h;
    tr.v.col(k) = v;
    if (k + 1 == n) break;
    h += dt * v;
    if (!h.allFinite()) throw DivergenceError("discrete_forward: hidden state diverged", static_cast<std::size_t>(k + 1));
  }
  tr.y = tr.h.transpose() * theta.c;
  tr.dy = tr.v.transpose() * theta.c;
  return tr;
}

}  // namespace memlab
