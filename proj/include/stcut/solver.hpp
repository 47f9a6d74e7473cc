#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "stcut/barrier.hpp"
#include "stcut/direction.hpp"
#include "stcut/problem.hpp"

namespace stcut {

enum class TraceLevel { None, Stages, Inner };

struct SolveOptions {
  TraceLevel trace = TraceLevel::Stages;
  Exec exec = Exec::Parallel;
};

/// Mutable state of one annealing run.
struct SolverState {
  std::vector<double> x;  ///< strictly interior, x_s + x_t == 0
  double beta = 0.0;
  double lambda = 0.0;
  int inner_iter = 0;  ///< accepted steps within the current stage
  int outer_iter = 0;  ///< completed beta stages
};

struct StageRecord {
  double beta = 0.0;
  double h = 0.0;          ///< annealed objective at stage end
  double step_norm = 0.0;  ///< ||d - x||_inf at stage end
  int iters = 0;
  bool stalled = false;
  std::vector<double> inner_h;  ///< filled under TraceLevel::Inner
};

struct StageOutcome {
  int iters = 0;
  bool stalled = false;
  double h_end = 0.0;
  double step_norm = 0.0;
};

struct RunReport {
  CutSolution solution;
  long total_inner_iters = 0;  ///< NI
  int beta_stages = 0;
  int stalled_stages = 0;
  double final_h = 0.0;
  double objm = 0.0;  ///< cut weight of the rounded solution
  double min_abs_x = 0.0;
  std::vector<double> final_x;
  std::vector<StageRecord> trace;
};

/// Componentwise uniform draw from (-0.1 q/p, 0.1 q/p), redrawing exact
/// zeros, then x_t = -x_s so the terminal constraint holds exactly.
/// Deterministic per seed.
std::vector<double> initial_interior_point(const Problem& problem,
                                           const BarrierConfig& config,
                                           std::uint64_t seed);

/// Golden-section minimizer of f on [lo, hi], narrowing the bracket to
/// width tol; returns the best point evaluated.
double golden_section(const std::function<double(double)>& f, double lo,
                      double hi, double tol);

/// Step length minimizing h(x + mu (target - x), beta) over mu in [0, 1]
/// by golden section to bracket width 1e-6. Never worse than staying:
/// returns 0 when no trial point improved on mu = 0. Every trial point is
/// a convex combination of interior points, hence interior.
double line_search(const Problem& problem, const BarrierConfig& config,
                   std::span<const double> x, std::span<const double> target,
                   double beta, Exec exec = Exec::Parallel);

/// Runs the inner descent loop at state.beta until ||d - x||_inf drops
/// below the stage tolerance or max_inner accepted steps; h is
/// non-increasing across the stage. A stall (cap reached, or the line
/// search unable to move) is reported, not fatal.
StageOutcome solve_stage(const Problem& problem, const BarrierConfig& config,
                         SolverState& state, Exec exec = Exec::Parallel,
                         std::vector<double>* inner_h = nullptr);

/// Full annealing run: interior start, geometric cooling from
/// initial_beta by theta until beta < beta_min or every coordinate sits
/// within round_margin of the box wall, then sign rounding.
RunReport solve(const Problem& problem, const BarrierConfig& config,
                std::uint64_t seed, const SolveOptions& options = {});

/// Sign rounding with ties (x_i == 0) sent to +1 and the t side forced
/// opposite to the s side.
CutSolution round_to_cut(const Problem& problem, std::span<const double> x);

}  // namespace stcut
