#include "stcut/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace stcut {

namespace {

// One contiguous run of Gray-coded assignments over the free coordinates.
// Each step flips a single node, so the cut updates in O(n).
struct ChunkBest {
  double cut = -1.0;
  std::uint64_t ties = 0;
  std::vector<int> assignment;
};

ChunkBest scan_chunk(const Problem& pb, const std::vector<int>& free_nodes,
                     std::uint64_t begin, std::uint64_t end) {
  const int n = pb.n;
  std::vector<int> side(n, 1);
  side[pb.s] = 1;
  side[pb.t] = -1;
  const std::uint64_t gray = begin ^ (begin >> 1);
  for (std::size_t k = 0; k < free_nodes.size(); ++k)
    side[free_nodes[k]] = (gray >> k) & 1 ? -1 : 1;

  double cut =
      kernels::cut_weight(pb.weights.data(), n, side.data(), Exec::Serial);

  ChunkBest best;
  best.cut = cut;
  best.ties = 1;
  best.assignment = side;

  for (std::uint64_t c = begin + 1; c < end; ++c) {
    const int k = std::countr_zero(c);
    const int v = free_nodes[k];
    // Pairs sharing v's side become crossing, crossing pairs stop.
    const double* row = pb.weights.data() + static_cast<std::size_t>(v) * n;
    double delta = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == v) continue;
      delta += side[j] == side[v] ? row[j] : -row[j];
    }
    cut += delta;
    side[v] = -side[v];

    if (cut > best.cut) {
      best.cut = cut;
      best.ties = 1;
      best.assignment = side;
    } else if (cut == best.cut) {
      ++best.ties;
      if (std::lexicographical_compare(side.begin(), side.end(),
                                       best.assignment.begin(),
                                       best.assignment.end()))
        best.assignment = side;
    }
  }
  return best;
}

void merge(ChunkBest& acc, ChunkBest&& part) {
  if (part.cut > acc.cut) {
    acc = std::move(part);
  } else if (part.cut == acc.cut) {
    acc.ties += part.ties;
    if (std::lexicographical_compare(part.assignment.begin(),
                                     part.assignment.end(),
                                     acc.assignment.begin(),
                                     acc.assignment.end()))
      acc.assignment = std::move(part.assignment);
  }
}

}  // namespace

OracleResult brute_force_cut(const Problem& pb, Exec exec) {
  if (pb.n > 24) throw TooLargeError(pb.n);
  if (auto v = validate(pb); !v)
    throw std::invalid_argument("brute_force_cut: " + v.detail);

  std::vector<int> free_nodes;
  for (int i = 0; i < pb.n; ++i)
    if (i != pb.s && i != pb.t) free_nodes.push_back(i);
  const int m = static_cast<int>(free_nodes.size());
  const std::uint64_t total = std::uint64_t{1} << m;

  ChunkBest best;
  if (exec == Exec::Serial || m <= 14) {
    best = scan_chunk(pb, free_nodes, 0, total);
  } else {
    // Fixed 256-chunk grid keeps the merge independent of the thread count.
    const int chunk_count = 256;
    const std::uint64_t chunk_size = total / chunk_count;
    std::vector<ChunkBest> parts(chunk_count);
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < chunk_count; ++c)
      parts[c] = scan_chunk(pb, free_nodes, c * chunk_size,
                            (c + 1) * chunk_size);
    best = std::move(parts[0]);
    for (int c = 1; c < chunk_count; ++c) merge(best, std::move(parts[c]));
  }

  OracleResult out;
  out.best_assignment = std::move(best.assignment);
  out.best_cut = best.cut;
  out.num_evaluated = total;
  out.ties = best.ties;
  return out;
}

std::vector<double> finite_diff_gradient(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x, double step) {
  std::vector<double> y(x.begin(), x.end());
  std::vector<double> grad(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double h = step * std::max(1.0, std::abs(x[i]));
    y[i] = x[i] + h;
    const double fp = f(y);
    y[i] = x[i] - h;
    const double fm = f(y);
    y[i] = x[i];
    grad[i] = (fp - fm) / (2.0 * h);
  }
  return grad;
}

double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi, double tol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) throw NoBracketError();
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (!(lo < mid && mid < hi)) break;  // interval at rounding resolution
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double grid_min(const std::function<double(double)>& f, int points) {
  if (points < 2) throw std::invalid_argument("grid_min: need >= 2 points");
  double best_mu = 0.0;
  double best_val = f(0.0);
  for (int k = 1; k < points; ++k) {
    const double mu = static_cast<double>(k) / (points - 1);
    const double val = f(mu);
    if (val < best_val) {
      best_val = val;
      best_mu = mu;
    }
  }
  return best_mu;
}

}  // namespace stcut
