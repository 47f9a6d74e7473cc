#pragma once

#include <cstddef>
#include <cstdint>

namespace stcut {

/// Execution policy for the numeric kernels. Parallel uses OpenMP when
/// compiled in; its reductions accumulate over fixed-size blocks so the
/// result does not depend on the thread count. Serial is the plain
/// reference implementation kept for testing and benchmarking.
enum class Exec { Serial, Parallel };

namespace kernels {

/// Block length for reproducible parallel reductions.
inline constexpr std::size_t kBlock = 512;

/// out = (W - alpha*I) x for dense symmetric row-major W.
void shifted_matvec(const double* w, std::size_t n, double alpha,
                    const double* x, double* out, Exec exec);

/// Single component of (W - alpha*I) x.
double shifted_matvec_entry(const double* w, std::size_t n, double alpha,
                            const double* x, std::size_t i);

double dot(const double* a, const double* b, std::size_t n, Exec exec);

/// Index of the first coordinate where the barrier arguments p*x+q or
/// q-p*x are not strictly positive, or -1 if x is strictly interior.
std::ptrdiff_t out_of_box_index(double p, double q, const double* x,
                                std::size_t n);

/// sum_i [ ln(p*x_i + q) + ln(q - p*x_i) ]; caller checks the domain.
double barrier_log_sum(double p, double q, const double* x, std::size_t n,
                       Exec exec);

/// out_i = -p [ 1/(p*x_i + q) - 1/(q - p*x_i) ].
void barrier_gradient(double p, double q, const double* x, std::size_t n,
                      double* out, Exec exec);

/// Interior minimizer of g*y + beta*barrier(y) along one coordinate,
/// in the rationalized form that is total in g and free of cancellation:
///   -q^2 g / (p (beta p + sqrt(beta^2 p^2 + q^2 g^2))).
/// Exactly odd in g; magnitude strictly below q/p.
double target_component(double g, double beta, double p, double q);

/// out_i = target_component(g_i, beta, p, q).
void target_map(const double* g, std::size_t n, double beta, double p,
                double q, double* out, Exec exec);

/// Total weight of edges whose endpoints carry different signs.
double cut_weight(const double* w, std::size_t n, const int* assignment,
                  Exec exec);

}  // namespace kernels
}  // namespace stcut
