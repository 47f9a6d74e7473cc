#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "stcut/barrier.hpp"
#include "stcut/problem.hpp"

namespace stcut {

/// Thrown when a point handed to the direction machinery violates the
/// terminal constraint x_s + x_t = 0 beyond tolerance.
class ConstraintViolatedError : public std::runtime_error {
 public:
  explicit ConstraintViolatedError(double sum)
      : std::runtime_error("x_s + x_t = " + std::to_string(sum) +
                           " violates the terminal constraint") {}
};

/// Closed-form interior target point and the data around it.
struct DirectionResult {
  std::vector<double> target;               ///< d(x, lambda), strictly inside the box
  double lambda = 0.0;                      ///< terminal multiplier
  std::vector<double> step;                 ///< target - x, the feasible descent step
  std::vector<double> lagrangian_gradient;  ///< gradient of h - lambda e_st^T x at x
};

/// Quadratic gradient with lambda subtracted at both terminals.
std::vector<double> shifted_gradient(const Problem& problem,
                                     std::span<const double> x, double lambda,
                                     Exec exec = Exec::Parallel);

/// Per-coordinate interior minimizer of g*y + beta*barrier(y); the minus
/// branch of the stationarity quadratic, which is the only root inside the
/// box. Total in g (g = 0 gives 0), exactly odd, strictly decreasing.
double target_component(double g, double beta, const BarrierConfig& config);

/// Multiplier making the two terminal target components cancel: the plain
/// average of the terminal quadratic-gradient entries.
double multiplier(const Problem& problem, std::span<const double> x);

/// d_s + d_t as a function of lambda. Zero exactly at multiplier(x);
/// strictly increasing in lambda, saturating at +-2q/p.
double multiplier_residual(const Problem& problem, const BarrierConfig& config,
                           std::span<const double> x, double lambda,
                           double beta);

/// Assembles the full feasible descent data at a strictly interior x with
/// x_s + x_t = 0 (within 1e-8). The terminal components of the shifted
/// gradient are formed antisymmetrically, so target[s] + target[t] == 0
/// holds exactly in floating point.
DirectionResult descent_direction(const Problem& problem,
                                  const BarrierConfig& config,
                                  std::span<const double> x, double beta,
                                  Exec exec = Exec::Parallel);

}  // namespace stcut
