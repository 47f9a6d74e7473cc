#pragma once

#include <vector>

#include "stcut/barrier.hpp"
#include "stcut/problem.hpp"

namespace stcut {

/// Eigenvalues of a dense symmetric matrix (row-major, consumed) by cyclic
/// Jacobi sweeps. Deterministic: fixed rotation order, fixed threshold.
/// Returned in no particular order.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n);

double jacobi_min_eigenvalue(std::vector<double> a, int n);

/// Smallest eigenvalue of W - alpha*I.
double min_eigenvalue(const Problem& problem);

/// Starting barrier parameter: the config override when set, otherwise
/// max(1, 1 - smin/2) with smin = min_eigenvalue(problem), doubled until
/// beta * 2p^2/q^2 + smin >= 0 so the first-stage objective is convex on
/// the box (the barrier Hessian is bounded below by 2p^2/q^2).
double initial_beta(const Problem& problem, const BarrierConfig& config);

}  // namespace stcut
