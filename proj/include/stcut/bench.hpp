#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stcut/barrier.hpp"
#include "stcut/problem.hpp"

namespace stcut {

enum class ObjuMode { Exact, TrivialBound };

/// One benchmark suite: sizes x seeds, each instance generated, solved and
/// scored against an upper reference (exact optimum for n <= 24, or the
/// total edge weight).
struct SuiteConfig {
  std::vector<int> sizes;
  int seeds_per_size = 5;  ///< seed values 1..seeds_per_size
  int weight_max = 50;
  double alpha = kDefaultAlpha;
  BarrierConfig solver;
  ObjuMode obju = ObjuMode::Exact;
};

struct BenchRecord {
  int test_id = 0;
  int n = 0;
  std::uint64_t seed = 0;
  long ni = 0;
  double objm = 0.0;
  double obju = 0.0;
  double ratio = 0.0;  ///< (obju - objm) / obju, 0 when obju == 0
  double wall_ms = 0.0;
  int stalled_stages = 0;
};

/// Runs the suite; instances may execute in parallel but records come back
/// sorted by (n, seed) with 1-based test ids. Throws std::invalid_argument
/// when exact mode is requested with a size above the enumeration cap.
std::vector<BenchRecord> run_suite(const SuiteConfig& config,
                                   Exec exec = Exec::Parallel);

/// CSV with one header row, one row per record
/// (test_id,n,seed,ni,objm,obju,ratio,stalled_stages,wall_ms) and trailing
/// '#' comment rows carrying mean/median ratio aggregates. Identical input
/// gives identical bytes except for the wall_ms column.
std::string suite_csv(const std::vector<BenchRecord>& records);

}  // namespace stcut
