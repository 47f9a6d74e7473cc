#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "stcut/kernels.hpp"
#include "stcut/problem.hpp"

namespace stcut {

class TooLargeError : public std::invalid_argument {
 public:
  explicit TooLargeError(int n)
      : std::invalid_argument("exhaustive enumeration capped at n = 24, got " +
                              std::to_string(n)) {}
};

class NoBracketError : public std::invalid_argument {
 public:
  NoBracketError() : std::invalid_argument("bisect_root: no sign change") {}
};

/// Exhaustive optimum over all partitions separating s and t.
struct OracleResult {
  std::vector<int> best_assignment;  ///< +1 at s, -1 at t; lexicographically
                                     ///< smallest optimum
  double best_cut = 0.0;
  std::uint64_t num_evaluated = 0;   ///< 2^(n-2) valid assignments
  std::uint64_t ties = 0;            ///< assignments achieving best_cut
};

/// Enumerates every assignment with assignment[s] = +1, assignment[t] = -1
/// (2^(n-2) of them) and returns the maximum cut. May run assignment
/// chunks in parallel; the chunk grid and merge order are fixed, so the
/// result (including the tie count and tie-broken assignment) is
/// deterministic. Throws TooLargeError for n > 24.
OracleResult brute_force_cut(const Problem& problem,
                             Exec exec = Exec::Parallel);

/// Central finite differences, component step h_i = step * max(1, |x_i|).
/// Errors from the probed function (e.g. OutOfBoxError) propagate.
std::vector<double> finite_diff_gradient(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x, double step);

/// Bisection on a bracketed sign change; stops when |f| <= tol or the
/// interval is narrower than tol. Throws NoBracketError without a sign
/// change.
double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi, double tol);

/// Argmin of f over a uniform grid on [0, 1]; first index wins ties.
double grid_min(const std::function<double(double)>& f, int points);

}  // namespace stcut
