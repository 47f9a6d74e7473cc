#include "stcut/problem.hpp"

#include <sstream>
#include <stdexcept>

#include "stcut/rng.hpp"

namespace stcut {

double Problem::total_weight() const {
  double total = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) total += weight(i, j);
  return total;
}

ValidationReport validate(const Problem& pb) {
  auto fail = [](ValidationIssue issue, std::string detail) {
    return ValidationReport{issue, std::move(detail)};
  };
  for (int i = 0; i < pb.n; ++i) {
    for (int j = i + 1; j < pb.n; ++j) {
      if (pb.weight(i, j) != pb.weight(j, i)) {
        std::ostringstream os;
        os << "weights[" << i << "][" << j << "] = " << pb.weight(i, j)
           << " but weights[" << j << "][" << i << "] = " << pb.weight(j, i);
        return fail(ValidationIssue::AsymmetricWeights, os.str());
      }
    }
  }
  for (int i = 0; i < pb.n; ++i) {
    if (pb.weight(i, i) != 0.0) {
      return fail(ValidationIssue::NonzeroDiagonal,
                  "weights[" + std::to_string(i) + "][" + std::to_string(i) +
                      "] must be 0");
    }
  }
  for (int i = 0; i < pb.n; ++i) {
    for (int j = 0; j < pb.n; ++j) {
      if (!(pb.weight(i, j) >= 0.0)) {
        return fail(ValidationIssue::NegativeWeight,
                    "weights[" + std::to_string(i) + "][" + std::to_string(j) +
                        "] is negative or NaN");
      }
    }
  }
  if (pb.s == pb.t || pb.s < 0 || pb.s >= pb.n || pb.t < 0 || pb.t >= pb.n) {
    return fail(ValidationIssue::BadTerminals,
                "terminals s=" + std::to_string(pb.s) +
                    ", t=" + std::to_string(pb.t) + " with n=" +
                    std::to_string(pb.n));
  }
  return {};
}

double cut_value(const Problem& pb, std::span<const int> assignment) {
  if (assignment.size() != static_cast<std::size_t>(pb.n))
    throw std::invalid_argument("cut_value: assignment has wrong length");
  for (int a : assignment)
    if (a != 1 && a != -1)
      throw std::invalid_argument(
          "cut_value: assignment entry must be +1 or -1");
  double total = 0.0;
  for (int i = 0; i < pb.n; ++i) {
    double row = 0.0;
    for (int j = i + 1; j < pb.n; ++j)
      if (assignment[i] != assignment[j]) row += pb.weight(i, j);
    total += row;
  }
  return total;
}

Problem random_problem(int n, std::uint64_t seed, int weight_max) {
  if (n < 2) throw std::invalid_argument("random_problem: need n >= 2");
  if (weight_max < 1)
    throw std::invalid_argument("random_problem: need weight_max >= 1");
  Problem pb;
  pb.n = n;
  pb.weights.assign(static_cast<std::size_t>(n) * n, 0.0);
  pb.s = 0;
  pb.t = 1;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double w = static_cast<double>(uniform_int(rng, 1, weight_max));
      pb.weight(i, j) = w;
      pb.weight(j, i) = w;
    }
  }
  return pb;
}

}  // namespace stcut
