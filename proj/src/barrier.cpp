#include "stcut/barrier.hpp"

namespace stcut {

namespace {

void require_length(const Problem& pb, std::span<const double> x,
                    const char* where) {
  if (x.size() != static_cast<std::size_t>(pb.n))
    throw std::invalid_argument(std::string(where) + ": x has wrong length");
}

void require_interior(const BarrierConfig& cfg, std::span<const double> x) {
  const std::ptrdiff_t bad =
      kernels::out_of_box_index(cfg.p, cfg.q, x.data(), x.size());
  if (bad >= 0) throw OutOfBoxError(static_cast<std::size_t>(bad), x[bad]);
}

}  // namespace

void validate_config(const BarrierConfig& cfg) {
  if (!(cfg.p > 0.0) || !(cfg.q > 0.0))
    throw std::invalid_argument("barrier parameters p, q must be positive");
  if (!(cfg.theta > 0.0) || !(cfg.theta < 1.0))
    throw std::invalid_argument("cooling factor theta must lie in (0, 1)");
  if (!(cfg.beta_min > 0.0))
    throw std::invalid_argument("beta_min must be positive");
  if (cfg.beta1 && !(*cfg.beta1 > 0.0))
    throw std::invalid_argument("beta1 must be positive");
  if (!(cfg.effective_eps() > 0.0))
    throw std::invalid_argument("eps_inner must be positive");
  if (cfg.max_inner < 1)
    throw std::invalid_argument("max_inner must be at least 1");
  if (!(cfg.round_margin > 0.0) || !(cfg.round_margin <= 1.0))
    throw std::invalid_argument("round_margin must lie in (0, 1]");
}

double quad_value(const Problem& pb, std::span<const double> x, Exec exec) {
  require_length(pb, x, "quad_value");
  std::vector<double> y(x.size());
  kernels::shifted_matvec(pb.weights.data(), x.size(), pb.alpha, x.data(),
                          y.data(), exec);
  return 0.5 * kernels::dot(x.data(), y.data(), x.size(), exec);
}

std::vector<double> quad_gradient(const Problem& pb, std::span<const double> x,
                                  Exec exec) {
  require_length(pb, x, "quad_gradient");
  std::vector<double> g(x.size());
  kernels::shifted_matvec(pb.weights.data(), x.size(), pb.alpha, x.data(),
                          g.data(), exec);
  return g;
}

double barrier_value(const BarrierConfig& cfg, std::span<const double> x,
                     Exec exec) {
  require_interior(cfg, x);
  return -kernels::barrier_log_sum(cfg.p, cfg.q, x.data(), x.size(), exec);
}

std::vector<double> barrier_gradient(const BarrierConfig& cfg,
                                     std::span<const double> x, Exec exec) {
  require_interior(cfg, x);
  std::vector<double> g(x.size());
  kernels::barrier_gradient(cfg.p, cfg.q, x.data(), x.size(), g.data(), exec);
  return g;
}

std::vector<double> barrier_hessian_diag(const BarrierConfig& cfg,
                                         std::span<const double> x) {
  require_interior(cfg, x);
  std::vector<double> h(x.size());
  const double p = cfg.p, q = cfg.q;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lo = p * x[i] + q;
    const double hi = q - p * x[i];
    h[i] = p * p * (1.0 / (lo * lo) + 1.0 / (hi * hi));
  }
  return h;
}

double annealed_value(const Problem& pb, const BarrierConfig& cfg,
                      std::span<const double> x, double beta, Exec exec) {
  if (!(beta > 0.0))
    throw std::invalid_argument("annealed_value: beta must be positive");
  return quad_value(pb, x, exec) + beta * barrier_value(cfg, x, exec);
}

std::vector<double> annealed_gradient(const Problem& pb,
                                      const BarrierConfig& cfg,
                                      std::span<const double> x, double beta,
                                      Exec exec) {
  if (!(beta > 0.0))
    throw std::invalid_argument("annealed_gradient: beta must be positive");
  std::vector<double> g = quad_gradient(pb, x, exec);
  std::vector<double> bg = barrier_gradient(cfg, x, exec);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] += beta * bg[i];
  return g;
}

}  // namespace stcut
