#include "memlab/dynamics/gru.hpp"

#include <cmath>

#include "memlab/core/errors.hpp"
#include "ode.hpp"

namespace memlab {

namespace {

Vector sigmoid(const Vector& z) { return (1.0 / (1.0 + (-z.array()).exp())).matrix(); }

}  // namespace

void GruParams::validate() const {
  const Eigen::Index m = c.size();
  const Eigen::Index d = Wz.cols();
  auto sq = [m](const Matrix& A) { return A.rows() == m && A.cols() == m; };
  auto in = [m, d](const Matrix& A) { return A.rows() == m && A.cols() == d; };
  if (!sq(Uz) || !sq(Ur) || !sq(Uh) || !in(Wz) || !in(Wr) || !in(Wh) || bz.size() != m || br.size() != m ||
      bh.size() != m)
    throw DomainError("GRU parameter shapes are inconsistent");
}

Vector GruParams::rhs(const Vector& h, const Vector& x) const {
  const Vector z = sigmoid(Wz * x + Uz * h + bz);
  const Vector r = sigmoid(Wr * x + Ur * h + br);
  const Vector hhat = (Wh * x + Uh * r.cwiseProduct(h) + bh).array().tanh().matrix();
  return z.cwiseProduct(hhat - h);
}

Matrix GruParams::rhs_jacobian(const Vector& h, const Vector& x) const {
  const Vector z = sigmoid(Wz * x + Uz * h + bz);
  const Vector r = sigmoid(Wr * x + Ur * h + br);
  const Vector hhat = (Wh * x + Uh * r.cwiseProduct(h) + bh).array().tanh().matrix();
  const Vector dz = z.array() * (1.0 - z.array());
  const Vector dr = r.array() * (1.0 - r.array());
  const Vector dhhat = 1.0 - hhat.array().square();
  const Eigen::Index m = c.size();
  // d(r*h)/dh = Diag(r) + Diag(h) Diag(dr) Ur
  const Matrix drh = Matrix(r.asDiagonal()) + h.cwiseProduct(dr).asDiagonal() * Ur;
  const Matrix dhh = dhhat.asDiagonal() * Uh * drh;
  return (hhat - h).cwiseProduct(dz).asDiagonal() * Uz + z.asDiagonal() * (dhh - Matrix::Identity(m, m));
}

GruParams GruParams::random(Rng& rng, std::size_t m, std::size_t d, Scalar hidden_scale, Scalar input_scale,
                            Scalar bias_scale) {
  const auto mi = static_cast<Eigen::Index>(m);
  const auto di = static_cast<Eigen::Index>(d);
  GruParams g;
  g.Wz = gaussian_matrix(rng, mi, di, input_scale);
  g.Uz = gaussian_matrix(rng, mi, mi, hidden_scale);
  g.bz = gaussian_vector(rng, mi, bias_scale);
  g.Wr = gaussian_matrix(rng, mi, di, input_scale);
  g.Ur = gaussian_matrix(rng, mi, mi, hidden_scale);
  g.br = gaussian_vector(rng, mi, bias_scale);
  g.Wh = gaussian_matrix(rng, mi, di, input_scale);
  g.Uh = gaussian_matrix(rng, mi, mi, hidden_scale);
  g.bh = Vector::Zero(mi);
  g.c = gaussian_vector(rng, mi, 1.0 / std::sqrt(static_cast<Scalar>(m)));
  return g;
}

Trajectory integrate_gru(const GruParams& gru, const Signal& x) {
  gru.validate();
  if (x.dim() != gru.d()) throw DomainError("signal dimension does not match the GRU input weights");
  auto f = [&](const Vector& h, const Vector& xk) -> Vector { return gru.rhs(h, xk); };
  return detail::rk4_zoh(f, static_cast<Eigen::Index>(gru.m()), gru.c, x, "integrate_gru");
}

Trajectory integrate_gru(const GruParams& gru, const Signal& x, const TimeGrid& grid) {
  return integrate_gru(gru, x).restricted(grid);
}

GruParams absorb_heaviside(const GruParams& gru, const Vector& x) {
  gru.validate();
  GruParams out = gru;
  out.bz = gru.Wz * x + gru.bz;
  out.br = gru.Wr * x + gru.br;
  out.bh = gru.Wh * x + gru.bh;
  out.Wz.setZero();
  out.Wr.setZero();
  out.Wh.setZero();
  return out;
}

Matrix gru_equilibrium_jacobian(const GruParams& gru, const std::pair<Vector, Vector>& absorbed_biases) {
  gru.validate();
  if (gru.bh.size() > 0 && gru.bh.cwiseAbs().maxCoeff() > 1e-12)
    throw DomainError("gru_equilibrium_jacobian: requires b_h = 0 after absorption");
  const auto& [bz, br] = absorbed_biases;
  const Eigen::Index m = static_cast<Eigen::Index>(gru.m());
  return sigmoid(bz).asDiagonal() * (gru.Uh * sigmoid(br).asDiagonal() - Matrix::Identity(m, m));
}

}  // namespace memlab
