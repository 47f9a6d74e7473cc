#include "stcut/kernels.hpp"

#include <cmath>
#include <vector>

namespace stcut::kernels {

namespace {

// Below this many elements a parallel region costs more than it saves;
// the if-clauses keep the arithmetic order unchanged either way.
constexpr std::size_t kParallelCutoff = 256;

inline double row_dot(const double* row, const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
  return acc;
}

// Parallel sum with a thread-count-independent combination order: per-block
// partials in parallel, then an ordered serial fold. A single block is the
// plain left fold, so small inputs match the serial path bitwise.
template <class Term>
double blocked_sum(std::size_t n, Term term) {
  if (n <= kBlock) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += term(i);
    return acc;
  }
  const std::size_t nblocks = (n + kBlock - 1) / kBlock;
  std::vector<double> partial(nblocks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = std::min(lo + kBlock, n);
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += term(i);
    partial[static_cast<std::size_t>(b)] = acc;
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

inline double barrier_term(double p, double q, double x) {
  return std::log(p * x + q) + std::log(q - p * x);
}

inline double barrier_grad_term(double p, double q, double x) {
  return -p * (1.0 / (p * x + q) - 1.0 / (q - p * x));
}

}  // namespace

void shifted_matvec(const double* w, std::size_t n, double alpha,
                    const double* x, double* out, Exec exec) {
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
      out[i] = row_dot(w + static_cast<std::size_t>(i) * n, x, n) -
               alpha * x[i];
  } else {
    for (std::size_t i = 0; i < n; ++i)
      out[i] = row_dot(w + i * n, x, n) - alpha * x[i];
  }
}

double shifted_matvec_entry(const double* w, std::size_t n, double alpha,
                            const double* x, std::size_t i) {
  return row_dot(w + i * n, x, n) - alpha * x[i];
}

double dot(const double* a, const double* b, std::size_t n, Exec exec) {
  if (exec == Exec::Serial) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
  }
  return blocked_sum(n, [&](std::size_t i) { return a[i] * b[i]; });
}

std::ptrdiff_t out_of_box_index(double p, double q, const double* x,
                                std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!(p * x[i] + q > 0.0) || !(q - p * x[i] > 0.0))
      return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

double barrier_log_sum(double p, double q, const double* x, std::size_t n,
                       Exec exec) {
  if (exec == Exec::Serial) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += barrier_term(p, q, x[i]);
    return acc;
  }
  return blocked_sum(n, [&](std::size_t i) { return barrier_term(p, q, x[i]); });
}

void barrier_gradient(double p, double q, const double* x, std::size_t n,
                      double* out, Exec exec) {
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
      out[i] = barrier_grad_term(p, q, x[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i) out[i] = barrier_grad_term(p, q, x[i]);
  }
}

double target_component(double g, double beta, double p, double q) {
  const double bp = beta * p;
  const double root = std::hypot(bp, q * g);
  return -(q * q) * g / (p * (bp + root));
}

void target_map(const double* g, std::size_t n, double beta, double p,
                double q, double* out, Exec exec) {
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
      out[i] = target_component(g[i], beta, p, q);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      out[i] = target_component(g[i], beta, p, q);
  }
}

double cut_weight(const double* w, std::size_t n, const int* assignment,
                  Exec exec) {
  if (exec == Exec::Serial) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (assignment[i] != assignment[j]) acc += w[i * n + j];
    return acc;
  }
  std::vector<double> rows(n, 0.0);
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    double acc = 0.0;
    for (std::size_t j = ii + 1; j < n; ++j)
      if (assignment[ii] != assignment[j]) acc += w[ii * n + j];
    rows[ii] = acc;
  }
  double total = 0.0;
  for (double v : rows) total += v;
  return total;
}

}  // namespace stcut::kernels
