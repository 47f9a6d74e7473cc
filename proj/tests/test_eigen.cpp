#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "stcut/eigen.hpp"
#include "stcut/rng.hpp"

#include "test_util.hpp"

using namespace stcut;
using namespace stcut::testing;

namespace {

// Characteristic-polynomial roots for symmetric 2x2.
double min_eig_2x2(double a, double b, double c) {
  return 0.5 * ((a + c) - std::sqrt((a - c) * (a - c) + 4.0 * b * b));
}

// Trigonometric closed form for symmetric 3x3 (all roots real).
double min_eig_3x3(const std::vector<double>& m) {
  const double p1 = m[1] * m[1] + m[2] * m[2] + m[5] * m[5];
  if (p1 == 0.0) return std::min({m[0], m[4], m[8]});
  const double q = (m[0] + m[4] + m[8]) / 3.0;
  const double p2 = (m[0] - q) * (m[0] - q) + (m[4] - q) * (m[4] - q) +
                    (m[8] - q) * (m[8] - q) + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  auto bij = [&](int i, int j) {
    return (m[3 * i + j] - (i == j ? q : 0.0)) / p;
  };
  const double detb =
      bij(0, 0) * (bij(1, 1) * bij(2, 2) - bij(1, 2) * bij(2, 1)) -
      bij(0, 1) * (bij(1, 0) * bij(2, 2) - bij(1, 2) * bij(2, 0)) +
      bij(0, 2) * (bij(1, 0) * bij(2, 1) - bij(1, 1) * bij(2, 0));
  const double r = std::clamp(detb / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  return q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
}

// Power iteration on sigma*I - (W - alpha*I); the dominant eigenvalue is
// sigma - min_eig.
double power_iteration_min_eig(const Problem& pb) {
  const int n = pb.n;
  double row_max = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += std::abs(pb.weight(i, j));
    row_max = std::max(row_max, row);
  }
  const double sigma = row_max + pb.alpha + 1.0;

  std::vector<double> v(n), w(n);
  for (int i = 0; i < n; ++i) v[i] = 1.0 + 0.01 * i;  // deterministic start
  double rho_prev = 0.0;
  for (int it = 0; it < 200000; ++it) {
    for (int i = 0; i < n; ++i) {
      double acc = (sigma + pb.alpha) * v[i];
      for (int j = 0; j < n; ++j) acc -= pb.weight(i, j) * v[j];
      w[i] = acc;
    }
    double num = 0.0, den = 0.0, norm = 0.0;
    for (int i = 0; i < n; ++i) {
      num += v[i] * w[i];
      den += v[i] * v[i];
      norm += w[i] * w[i];
    }
    const double rho = num / den;
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
    if (it > 10 && std::abs(rho - rho_prev) < 1e-12 * std::abs(rho)) break;
    rho_prev = rho;
  }
  double num = 0.0, den = 0.0;
  for (int i = 0; i < n; ++i) {
    double acc = (sigma + pb.alpha) * v[i];
    for (int j = 0; j < n; ++j) acc -= pb.weight(i, j) * v[j];
    num += v[i] * acc;
    den += v[i] * v[i];
  }
  return sigma - num / den;
}

}  // namespace

TEST_SUITE("eigen") {

TEST_CASE("K2 and K3 closed-form spectra") {
  CHECK(min_eigenvalue(k2(1.0)) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(min_eigenvalue(k2(5.0)) == doctest::Approx(-5.0).epsilon(1e-12));
  // Unit K3 has eigenvalues {2, -1, -1}.
  CHECK(min_eigenvalue(k3_unit()) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("alpha shifts the spectrum") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    Problem pb = random_problem(6, rng());
    pb.alpha = 0.0;
    const double base = min_eigenvalue(pb);
    pb.alpha = 0.75;
    CHECK(min_eigenvalue(pb) == doctest::Approx(base - 0.75).epsilon(1e-10));
  }
}

TEST_CASE("jacobi matches characteristic-polynomial roots for n <= 3") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    {
      const double a = uniform_real(rng, -5, 5);
      const double b = uniform_real(rng, -5, 5);
      const double c = uniform_real(rng, -5, 5);
      const double got = jacobi_min_eigenvalue({a, b, b, c}, 2);
      CHECK(got == doctest::Approx(min_eig_2x2(a, b, c)).epsilon(1e-10));
    }
    {
      std::vector<double> m(9);
      const double a01 = uniform_real(rng, -5, 5);
      const double a02 = uniform_real(rng, -5, 5);
      const double a12 = uniform_real(rng, -5, 5);
      m[0] = uniform_real(rng, -5, 5);
      m[4] = uniform_real(rng, -5, 5);
      m[8] = uniform_real(rng, -5, 5);
      m[1] = m[3] = a01;
      m[2] = m[6] = a02;
      m[5] = m[7] = a12;
      const double got = jacobi_min_eigenvalue(m, 3);
      CHECK(got == doctest::Approx(min_eig_3x3(m)).epsilon(1e-9));
    }
  }
}

TEST_CASE("jacobi matches power iteration up to n = 20") {
  std::mt19937_64 rng(53);
  for (int n : {4, 8, 12, 16, 20}) {
    Problem pb = random_problem(n, rng());
    const double jac = min_eigenvalue(pb);
    const double pow = power_iteration_min_eig(pb);
    CHECK(jac == doctest::Approx(pow).epsilon(1e-6));
  }
}

TEST_CASE("zero matrix") {
  Problem pb = k2(5.0);
  pb.weights.assign(4, 0.0);
  pb.alpha = 0.0;
  CHECK(min_eigenvalue(pb) == 0.0);
  CHECK(initial_beta(pb, {}) == 1.0);
}

TEST_CASE("initial_beta follows the spectrum rule") {
  // K2 unit: smin = -1, beta = 1 - (-1)/2 = 1.5 exactly.
  CHECK(initial_beta(k2(1.0), {}) == 1.5);

  BarrierConfig cfg;
  cfg.beta1 = 42.0;
  CHECK(initial_beta(k2(1.0), cfg) == 42.0);
}

TEST_CASE("initial_beta makes the first stage convex") {
  std::mt19937_64 rng(54);
  const double pqs[][2] = {{1.0, 1.0}, {1.0, 2.0}, {2.0, 3.0}, {1.0, 10.0}};
  for (int trial = 0; trial < 16; ++trial) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 11));
    const Problem pb = random_problem(n, rng());
    BarrierConfig cfg;
    cfg.p = pqs[trial % 4][0];
    cfg.q = pqs[trial % 4][1];
    const double beta = initial_beta(pb, cfg);
    // Assemble (W - alpha I) + beta * diag(b''(0)) and check PSD.
    std::vector<double> m = pb.weights;
    const double diag = beta * 2.0 * cfg.p * cfg.p / (cfg.q * cfg.q);
    for (int i = 0; i < n; ++i) m[i * n + i] += diag - pb.alpha;
    CHECK(jacobi_min_eigenvalue(std::move(m), n) >= -1e-8);
  }
}

}  // TEST_SUITE
