#include "stcut/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "stcut/oracle.hpp"
#include "stcut/solver.hpp"

namespace stcut {

namespace {

double mean(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x;
  return v.empty() ? 0.0 : acc / static_cast<double>(v.size());
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::string fmt(double v, const char* spec = "%.17g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

}  // namespace

std::vector<BenchRecord> run_suite(const SuiteConfig& cfg, Exec exec) {
  if (cfg.sizes.empty())
    throw std::invalid_argument("run_suite: no sizes given");
  if (cfg.seeds_per_size < 1)
    throw std::invalid_argument("run_suite: need at least one seed");
  std::vector<int> sizes = cfg.sizes;
  std::sort(sizes.begin(), sizes.end());
  if (cfg.obju == ObjuMode::Exact && sizes.back() > 24)
    throw std::invalid_argument(
        "run_suite: exact obju mode requires all sizes <= 24, got " +
        std::to_string(sizes.back()));

  const int runs = static_cast<int>(sizes.size()) * cfg.seeds_per_size;
  std::vector<BenchRecord> records(runs);
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < runs; ++r) {
    const int n = sizes[r / cfg.seeds_per_size];
    const std::uint64_t seed =
        static_cast<std::uint64_t>(r % cfg.seeds_per_size) + 1;

    Problem pb = random_problem(n, seed, cfg.weight_max);
    pb.alpha = cfg.alpha;

    const auto start = std::chrono::steady_clock::now();
    const RunReport rep =
        solve(pb, cfg.solver, seed, {TraceLevel::None, exec});
    const auto stop = std::chrono::steady_clock::now();

    BenchRecord rec;
    rec.test_id = r + 1;
    rec.n = n;
    rec.seed = seed;
    rec.ni = rep.total_inner_iters;
    rec.objm = rep.objm;
    rec.obju = cfg.obju == ObjuMode::Exact
                   ? brute_force_cut(pb, exec).best_cut
                   : pb.total_weight();
    rec.ratio = rec.obju > 0.0 ? (rec.obju - rec.objm) / rec.obju : 0.0;
    rec.wall_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    rec.stalled_stages = rep.stalled_stages;
    records[r] = rec;
  }
  return records;
}

std::string suite_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream os;
  os << "test_id,n,seed,ni,objm,obju,ratio,stalled_stages,wall_ms\n";
  for (const BenchRecord& r : records) {
    os << r.test_id << ',' << r.n << ',' << r.seed << ',' << r.ni << ','
       << fmt(r.objm) << ',' << fmt(r.obju) << ',' << fmt(r.ratio) << ','
       << r.stalled_stages << ',' << fmt(r.wall_ms, "%.3f") << '\n';
  }
  std::map<int, std::vector<double>> by_size;
  std::vector<double> all;
  for (const BenchRecord& r : records) {
    by_size[r.n].push_back(r.ratio);
    all.push_back(r.ratio);
  }
  for (const auto& [n, ratios] : by_size)
    os << "# aggregate,n=" << n << ",runs=" << ratios.size()
       << ",mean_ratio=" << fmt(mean(ratios)) << ",median_ratio="
       << fmt(median(ratios)) << '\n';
  os << "# aggregate,all,runs=" << all.size() << ",mean_ratio="
     << fmt(mean(all)) << ",median_ratio=" << fmt(median(all)) << '\n';
  return os.str();
}

}  // namespace stcut
