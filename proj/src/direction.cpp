#include "stcut/direction.hpp"

#include <cmath>

namespace stcut {

namespace {

void require_length(const Problem& pb, std::span<const double> x,
                    const char* where) {
  if (x.size() != static_cast<std::size_t>(pb.n))
    throw std::invalid_argument(std::string(where) + ": x has wrong length");
}

// Terminal entries of (W - alpha I) x, shared by multiplier and residual so
// both see bitwise-identical values.
struct TerminalGradients {
  double at_s;
  double at_t;
};

TerminalGradients terminal_gradients(const Problem& pb,
                                     std::span<const double> x) {
  const std::size_t n = x.size();
  return {kernels::shifted_matvec_entry(pb.weights.data(), n, pb.alpha,
                                        x.data(), pb.s),
          kernels::shifted_matvec_entry(pb.weights.data(), n, pb.alpha,
                                        x.data(), pb.t)};
}

}  // namespace

std::vector<double> shifted_gradient(const Problem& pb,
                                     std::span<const double> x, double lambda,
                                     Exec exec) {
  require_length(pb, x, "shifted_gradient");
  std::vector<double> g = quad_gradient(pb, x, exec);
  g[pb.s] -= lambda;
  g[pb.t] -= lambda;
  return g;
}

double target_component(double g, double beta, const BarrierConfig& cfg) {
  return kernels::target_component(g, beta, cfg.p, cfg.q);
}

double multiplier(const Problem& pb, std::span<const double> x) {
  require_length(pb, x, "multiplier");
  const auto [gs, gt] = terminal_gradients(pb, x);
  return 0.5 * gs + 0.5 * gt;
}

double multiplier_residual(const Problem& pb, const BarrierConfig& cfg,
                           std::span<const double> x, double lambda,
                           double beta) {
  require_length(pb, x, "multiplier_residual");
  const auto [as, at] = terminal_gradients(pb, x);
  // Recentred form: a_s - lambda = half + shift, a_t - lambda = -half + shift.
  // At lambda == multiplier(x) the shift vanishes and the two shifted
  // gradients are exact negatives, so the target components cancel exactly.
  const double mid = 0.5 * as + 0.5 * at;
  const double half = 0.5 * as - 0.5 * at;
  const double shift = mid - lambda;
  const double ds = kernels::target_component(half + shift, beta, cfg.p, cfg.q);
  const double dt =
      kernels::target_component(-half + shift, beta, cfg.p, cfg.q);
  return ds + dt;
}

DirectionResult descent_direction(const Problem& pb, const BarrierConfig& cfg,
                                  std::span<const double> x, double beta,
                                  Exec exec) {
  require_length(pb, x, "descent_direction");
  if (!(beta > 0.0))
    throw std::invalid_argument("descent_direction: beta must be positive");
  const std::ptrdiff_t bad =
      kernels::out_of_box_index(cfg.p, cfg.q, x.data(), x.size());
  if (bad >= 0) throw OutOfBoxError(static_cast<std::size_t>(bad), x[bad]);
  const double constraint = x[pb.s] + x[pb.t];
  if (!(std::abs(constraint) <= 1e-8))
    throw ConstraintViolatedError(constraint);

  DirectionResult out;
  std::vector<double> g = quad_gradient(pb, x, exec);
  out.lambda = 0.5 * g[pb.s] + 0.5 * g[pb.t];
  // Antisymmetric terminal pair; equals g_i - lambda up to rounding but
  // guarantees target[s] + target[t] == 0 bitwise.
  const double half = 0.5 * g[pb.s] - 0.5 * g[pb.t];
  g[pb.s] = half;
  g[pb.t] = -half;

  const std::size_t n = x.size();
  out.target.resize(n);
  kernels::target_map(g.data(), n, beta, cfg.p, cfg.q, out.target.data(),
                      exec);

  out.step.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.step[i] = out.target[i] - x[i];

  out.lagrangian_gradient.resize(n);
  kernels::barrier_gradient(cfg.p, cfg.q, x.data(), n,
                            out.lagrangian_gradient.data(), exec);
  for (std::size_t i = 0; i < n; ++i)
    out.lagrangian_gradient[i] = g[i] + beta * out.lagrangian_gradient[i];
  return out;
}

}  // namespace stcut
