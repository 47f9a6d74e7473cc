#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace stcut {

/// Default diagonal regularizer for the continuous relaxation.
inline constexpr double kDefaultAlpha = 1e-6;

/// A weighted s-t max-cut instance: dense symmetric nonnegative weight
/// matrix with zero diagonal, two distinguished terminal nodes, and the
/// diagonal regularizer alpha used by the quadratic relaxation.
///
/// Immutable by convention after construction; safe to share across
/// concurrent solver runs.
struct Problem {
  int n = 0;                    ///< node count, >= 2
  std::vector<double> weights;  ///< n*n row-major, symmetric, zero diagonal
  int s = 0;                    ///< first terminal (0-based)
  int t = 1;                    ///< second terminal (0-based)
  double alpha = kDefaultAlpha;

  double weight(int i, int j) const {
    return weights[static_cast<std::size_t>(i) * n + j];
  }
  double& weight(int i, int j) {
    return weights[static_cast<std::size_t>(i) * n + j];
  }

  /// Sum of all distinct edge weights; a trivial upper bound on any cut.
  double total_weight() const;

  bool operator==(const Problem&) const = default;
};

enum class ValidationIssue {
  None,
  AsymmetricWeights,
  NegativeWeight,
  NonzeroDiagonal,
  BadTerminals,
};

struct ValidationReport {
  ValidationIssue issue = ValidationIssue::None;
  std::string detail;

  bool ok() const { return issue == ValidationIssue::None; }
  explicit operator bool() const { return ok(); }
};

/// Checks the Problem invariants and reports the first violation found,
/// scanning symmetry, then the diagonal, then signs, then terminals.
ValidationReport validate(const Problem& problem);

/// A rounded cut: per-node side in {-1,+1}, the total weight crossing the
/// partition, and the quadratic objective evaluated at the +-1 point.
struct CutSolution {
  std::vector<int> assignment;
  double cut_weight = 0.0;
  double objective_f = 0.0;
};

/// Total weight of edges whose endpoints lie on different sides.
/// Throws std::invalid_argument if `assignment` has the wrong length or an
/// entry outside {-1,+1}.
double cut_value(const Problem& problem, std::span<const int> assignment);

/// Complete graph on n nodes with integer weights drawn uniformly from
/// {1,...,weight_max}, mirrored for symmetry; terminals are nodes 0 and 1.
/// Bitwise identical output for identical (n, seed, weight_max).
Problem random_problem(int n, std::uint64_t seed, int weight_max = 50);

}  // namespace stcut
