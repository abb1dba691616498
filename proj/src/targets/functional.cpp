#include "memlab/targets/functional.hpp"

#include <cmath>
#include <utility>

#include "memlab/core/errors.hpp"
#include "memlab/dynamics/rnn.hpp"

namespace memlab {

const char* to_string(TargetDescriptor d) noexcept {
  switch (d) {
    case TargetDescriptor::LinearKernel: return "linear_kernel";
    case TargetDescriptor::TanhOfLinear: return "tanh_of_linear";
    case TargetDescriptor::TeacherRnn: return "teacher_rnn";
    case TargetDescriptor::TeacherGru: return "teacher_gru";
    case TargetDescriptor::RnnModel: return "rnn_model";
    case TargetDescriptor::GruModel: return "gru_model";
  }
  return "?";
}

FunctionalTarget::FunctionalTarget(TargetDescriptor descriptor, std::size_t input_dim, Evaluator eval, std::string note)
    : descriptor_(descriptor), dim_(input_dim), eval_(std::move(eval)), note_(std::move(note)) {}

FunctionalOutput eval_linear_functional(const MemoryKernel& rho, const Signal& x, const TimeGrid& grid) {
  if (x.dim() != rho.dim()) throw DomainError("eval_linear_functional: signal and kernel dimensions differ");

  // Jumps of the held input, projected on the kernel weights.
  std::vector<std::pair<Scalar, Scalar>> jumps;
  Vector prev = Vector::Zero(static_cast<Eigen::Index>(x.dim()));
  for (std::size_t j = 0; j < x.size(); ++j) {
    const Vector cur = x.at(j);
    const Scalar a = rho.weights().dot(cur - prev);
    if (a != 0) jumps.emplace_back(x.grid.time(j), a);
    prev = cur;
  }

  const auto n = static_cast<Eigen::Index>(grid.size());
  FunctionalOutput out{Vector::Zero(n), Vector::Zero(n)};
  const Scalar tol = 1e-9 * x.grid.dt();
  for (Eigen::Index i = 0; i < n; ++i) {
    const Scalar t = grid.time(static_cast<std::size_t>(i));
    Scalar y = 0, dy = 0;
    for (const auto& [tau, a] : jumps) {
      Scalar s = t - tau;
      if (s < -tol) break;  // jumps are sorted by time
      s = std::max<Scalar>(s, 0);
      y += a * rho.profile_integral(s);
      dy += a * rho.profile(s);
    }
    out.y(i) = y;
    out.dy(i) = dy;
  }
  return out;
}

FunctionalTarget make_linear_target(const MemoryKernel& rho) {
  return FunctionalTarget(
      TargetDescriptor::LinearKernel, rho.dim(),
      [rho](const Signal& x, const TimeGrid& g) { return eval_linear_functional(rho, x, g); }, rho.describe());
}

FunctionalTarget make_nonlinear_target(const MemoryKernel& rho) {
  return FunctionalTarget(
      TargetDescriptor::TanhOfLinear, rho.dim(),
      [rho](const Signal& x, const TimeGrid& g) {
        FunctionalOutput lin = eval_linear_functional(rho, x, g);
        FunctionalOutput out;
        out.y = lin.y.array().tanh().matrix();
        out.dy = ((1.0 - out.y.array().square()) * lin.dy.array()).matrix();
        return out;
      },
      "tanh(" + rho.describe() + ")");
}

Signal refine_signal(const Signal& x, std::size_t factor) {
  if (factor <= 1) return x;
  const TimeGrid fine = x.grid.refined(factor);
  Matrix v(x.values.rows(), static_cast<Eigen::Index>(fine.size()));
  for (std::size_t k = 0; k < fine.size(); ++k)
    v.col(static_cast<Eigen::Index>(k)) = x.at(std::min(k / factor, x.size() - 1));
  return Signal(fine, std::move(v), x.kind);
}

namespace {

Trajectory coarsen(const Trajectory& fine, const TimeGrid& coarse, std::size_t factor) {
  const auto n = static_cast<Eigen::Index>(coarse.size());
  Trajectory out{coarse, Matrix(fine.h.rows(), n), Matrix(fine.v.rows(), n), Vector(n), Vector(n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto j = static_cast<Eigen::Index>(static_cast<std::size_t>(k) * factor);
    out.h.col(k) = fine.h.col(j);
    out.v.col(k) = fine.v.col(j);
    out.y(k) = fine.y(j);
    out.dy(k) = fine.dy(j);
  }
  return out;
}

}  // namespace

FunctionalTarget make_rnn_target(RnnParams theta, Activation act, Integrator integrator, std::size_t substeps,
                                 TargetDescriptor descriptor) {
  theta.validate();
  auto p = std::make_shared<const RnnParams>(std::move(theta));
  const std::size_t s = std::max<std::size_t>(1, substeps);
  FunctionalTarget::Evaluator eval;
  if (integrator == Integrator::Euler) {
    eval = [p, act](const Signal& x, const TimeGrid& g) {
      const Trajectory tr = discrete_forward(*p, act, x, x.grid.dt()).restricted(g);
      return FunctionalOutput{tr.y, tr.dy};
    };
  } else {
    eval = [p, act, s](const Signal& x, const TimeGrid& g) {
      const Trajectory full = s == 1 ? integrate_rnn(*p, act, x) : coarsen(integrate_rnn(*p, act, refine_signal(x, s)), x.grid, s);
      const Trajectory tr = full.restricted(g);
      return FunctionalOutput{tr.y, tr.dy};
    };
  }
  std::string note = std::string(to_string(act.tag)) + (integrator == Integrator::Euler ? " rnn/euler" : " rnn/rk4");
  FunctionalTarget target(descriptor, p->d(), std::move(eval), std::move(note));
  target.rnn_ = p;
  return target;
}

FunctionalTarget make_gru_target(GruParams gru, std::size_t substeps, TargetDescriptor descriptor) {
  gru.validate();
  auto p = std::make_shared<const GruParams>(std::move(gru));
  const std::size_t s = std::max<std::size_t>(1, substeps);
  FunctionalTarget target(
      descriptor, p->d(),
      [p, s](const Signal& x, const TimeGrid& g) {
        const Trajectory full = s == 1 ? integrate_gru(*p, x) : coarsen(integrate_gru(*p, refine_signal(x, s)), x.grid, s);
        const Trajectory tr = full.restricted(g);
        return FunctionalOutput{tr.y, tr.dy};
      },
      "gru/rk4");
  target.gru_ = p;
  return target;
}

}  // namespace memlab
