#include "stcut/eigen.hpp"

#include <algorithm>
#include <cmath>

namespace stcut {

namespace {

double off_diagonal_norm2(const std::vector<double>& a, int n) {
  double off = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
  return off;
}

}  // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
  if (n == 1) return {a[0]};
  double frob2 = 0.0;
  for (double v : a) frob2 += v * v;
  // Absolute floor handles the all-zero matrix.
  const double thresh2 = std::max(1e-28 * frob2, 1e-300);

  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm2(a, n) <= thresh2) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r * n + p];
          const double arq = a[r * n + q];
          a[r * n + p] = arp - s * (arq + tau * arp);
          a[p * n + r] = a[r * n + p];
          a[r * n + q] = arq + s * (arp - tau * arq);
          a[q * n + r] = a[r * n + q];
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[i * n + i];
  return eig;
}

double jacobi_min_eigenvalue(std::vector<double> a, int n) {
  const std::vector<double> eig = jacobi_eigenvalues(std::move(a), n);
  return *std::min_element(eig.begin(), eig.end());
}

double min_eigenvalue(const Problem& pb) {
  std::vector<double> a = pb.weights;
  for (int i = 0; i < pb.n; ++i) a[i * pb.n + i] -= pb.alpha;
  return jacobi_min_eigenvalue(std::move(a), pb.n);
}

double initial_beta(const Problem& pb, const BarrierConfig& cfg) {
  if (cfg.beta1) return *cfg.beta1;
  const double smin = min_eigenvalue(pb);
  double beta = std::max(1.0, 1.0 - smin / 2.0);
  const double curvature_floor = 2.0 * cfg.p * cfg.p / (cfg.q * cfg.q);
  while (beta * curvature_floor + smin < 0.0) beta *= 2.0;
  return beta;
}

}  // namespace stcut
