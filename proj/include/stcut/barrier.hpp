#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "stcut/kernels.hpp"
#include "stcut/problem.hpp"

namespace stcut {

/// Barrier shape and annealing schedule parameters.
///
/// The barrier b(x) = -sum_i [ln(p x_i + q) + ln(q - p x_i)] confines
/// iterates to the open box (-q/p, q/p)^n. beta1 and eps_inner are
/// optional: when unset, beta1 is derived from the instance spectrum
/// (initial_beta) and eps_inner defaults to 1e-6 times the box halfwidth.
struct BarrierConfig {
  double p = 1.0;                   ///< barrier slope, > 0
  double q = 1.0;                   ///< barrier offset, > 0
  std::optional<double> beta1;      ///< starting barrier parameter
  double theta = 0.9;               ///< cooling factor, in (0, 1)
  double beta_min = 1e-4;           ///< cooling floor, > 0
  std::optional<double> eps_inner;  ///< stage tolerance on ||d - x||_inf
  int max_inner = 500;              ///< iteration cap per stage
  double round_margin = 0.99;       ///< |x_i| / (q/p) early-rounding level

  double box_halfwidth() const { return q / p; }
  double effective_eps() const {
    return eps_inner ? *eps_inner : 1e-6 * box_halfwidth();
  }
};

/// Throws std::invalid_argument when a config field is out of range.
void validate_config(const BarrierConfig& config);

/// Thrown when a point reaches or leaves the open barrier box.
class OutOfBoxError : public std::domain_error {
 public:
  OutOfBoxError(std::size_t index, double value)
      : std::domain_error("coordinate " + std::to_string(index) + " = " +
                          std::to_string(value) +
                          " is outside the open barrier box"),
        index_(index),
        value_(value) {}

  std::size_t index() const { return index_; }
  double value() const { return value_; }

 private:
  std::size_t index_;
  double value_;
};

/// 1/2 x^T (W - alpha I) x.
double quad_value(const Problem& problem, std::span<const double> x,
                  Exec exec = Exec::Parallel);

/// (W - alpha I) x.
std::vector<double> quad_gradient(const Problem& problem,
                                  std::span<const double> x,
                                  Exec exec = Exec::Parallel);

/// Barrier value; finite on the open box, throws OutOfBoxError otherwise.
double barrier_value(const BarrierConfig& config, std::span<const double> x,
                     Exec exec = Exec::Parallel);

/// Component i: -p [1/(p x_i + q) - 1/(q - p x_i)]. Shares the sign of x_i
/// when p == q; blows up toward +-infinity at the box walls.
std::vector<double> barrier_gradient(const BarrierConfig& config,
                                     std::span<const double> x,
                                     Exec exec = Exec::Parallel);

/// Component i: p^2 [1/(p x_i + q)^2 + 1/(q - p x_i)^2]; at least 2p^2/q^2.
std::vector<double> barrier_hessian_diag(const BarrierConfig& config,
                                         std::span<const double> x);

/// The annealed objective h(x, beta) = quad + beta * barrier.
double annealed_value(const Problem& problem, const BarrierConfig& config,
                      std::span<const double> x, double beta,
                      Exec exec = Exec::Parallel);

std::vector<double> annealed_gradient(const Problem& problem,
                                      const BarrierConfig& config,
                                      std::span<const double> x, double beta,
                                      Exec exec = Exec::Parallel);

}  // namespace stcut
