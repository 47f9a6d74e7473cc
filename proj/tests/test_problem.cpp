#include <doctest.h>

#include <random>

#include "stcut/problem.hpp"
#include "stcut/rng.hpp"

#include "test_util.hpp"

using namespace stcut;
using namespace stcut::testing;

TEST_SUITE("problem") {

TEST_CASE("validate accepts the smallest legal instance") {
  CHECK(validate(k2(5.0)).ok());
}

TEST_CASE("validate reports the first violated invariant") {
  Problem pb = k2(5.0);
  pb.weight(0, 1) = 1.0;
  pb.weight(1, 0) = 2.0;
  CHECK(validate(pb).issue == ValidationIssue::AsymmetricWeights);

  pb = k2(5.0);
  pb.weight(0, 0) = 3.0;
  CHECK(validate(pb).issue == ValidationIssue::NonzeroDiagonal);

  pb = k2(5.0);
  pb.weight(0, 1) = pb.weight(1, 0) = -1.0;
  CHECK(validate(pb).issue == ValidationIssue::NegativeWeight);

  pb = k2(5.0);
  pb.t = 0;
  CHECK(validate(pb).issue == ValidationIssue::BadTerminals);

  pb = k2(5.0);
  pb.t = 2;
  CHECK(validate(pb).issue == ValidationIssue::BadTerminals);

  // Asymmetry outranks the later checks.
  pb = k2(5.0);
  pb.weight(0, 1) = 1.0;
  pb.weight(1, 0) = 2.0;
  pb.t = 0;
  CHECK(validate(pb).issue == ValidationIssue::AsymmetricWeights);
}

TEST_CASE("cut_value on hand instances") {
  const Problem pb2 = k2(5.0);
  CHECK(cut_value(pb2, std::vector<int>{1, -1}) == 5.0);
  CHECK(cut_value(pb2, std::vector<int>{1, 1}) == 0.0);

  const Problem pb3 = k3_unit();
  CHECK(cut_value(pb3, std::vector<int>{1, -1, -1}) == 2.0);
  CHECK(cut_value(pb3, std::vector<int>{-1, -1, -1}) == 0.0);
}

TEST_CASE("cut_value rejects malformed assignments") {
  const Problem pb = k2(5.0);
  CHECK_THROWS_AS(cut_value(pb, std::vector<int>{1}), std::invalid_argument);
  CHECK_THROWS_AS(cut_value(pb, std::vector<int>{1, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(cut_value(pb, std::vector<int>{1, 2}),
                  std::invalid_argument);
}

TEST_CASE("cut is invariant under a global flip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 7));
    const Problem pb = random_problem(n, rng());
    std::vector<int> a = random_assignment(n, rng);
    std::vector<int> flipped(a);
    for (int& v : flipped) v = -v;
    CHECK(cut_value(pb, a) == cut_value(pb, flipped));
  }
}

TEST_CASE("cut equals the quarter double-sum form") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 7));
    const Problem pb = random_problem(n, rng());
    const std::vector<int> a = random_assignment(n, rng);
    double dbl = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        dbl += pb.weight(i, j) * (1.0 - a[i] * a[j]);
    CHECK(cut_value(pb, a) == doctest::Approx(0.25 * dbl).epsilon(1e-12));
  }
}

TEST_CASE("x'Wx/2 == total - 2*cut on all of {-1,1}^n, n <= 6") {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 6; ++n) {
    const Problem pb = random_problem(n, rng());
    const double total = pb.total_weight();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> a(n);
      for (int i = 0; i < n; ++i) a[i] = (mask >> i) & 1 ? -1 : 1;
      double quad = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) quad += pb.weight(i, j) * a[i] * a[j];
      CHECK(0.5 * quad ==
            doctest::Approx(total - 2.0 * cut_value(pb, a)).epsilon(1e-12));
    }
  }
}

TEST_CASE("random_problem is deterministic and in range") {
  const Problem a = random_problem(5, 7);
  const Problem b = random_problem(5, 7);
  CHECK(a == b);

  const Problem tiny = random_problem(2, 99, 1);
  CHECK(tiny.weights == std::vector<double>{0, 1, 1, 0});

  const Problem pb = random_problem(5, 7, 50);
  CHECK(validate(pb).ok());
  CHECK(pb.s == 0);
  CHECK(pb.t == 1);
  for (int i = 0; i < pb.n; ++i) {
    for (int j = i + 1; j < pb.n; ++j) {
      CHECK(pb.weight(i, j) >= 1.0);
      CHECK(pb.weight(i, j) <= 50.0);
      CHECK(pb.weight(i, j) == static_cast<int>(pb.weight(i, j)));
    }
  }
  CHECK_THROWS_AS(random_problem(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(random_problem(4, 0, 0), std::invalid_argument);
}

}  // TEST_SUITE
