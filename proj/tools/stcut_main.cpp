// Command-line front end: instance generation, single solves with JSON
// reports, suite benchmarking with CSV output, and the exact oracle.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stcut/bench.hpp"
#include "stcut/eigen.hpp"
#include "stcut/graph_io.hpp"
#include "stcut/oracle.hpp"
#include "stcut/solver.hpp"

namespace {

using nlohmann::json;

// Input/usage problems exit with code 2; anything else that escapes is an
// internal error and exits with 3.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverFlags {
  double p = 1.0;
  double q = 1.0;
  double alpha = stcut::kDefaultAlpha;
  double theta = 0.9;
  std::optional<double> beta1;
  double beta_min = 1e-4;
  double eps = 1e-6;
  int max_inner = 500;
};

void add_solver_flags(CLI::App* cmd, SolverFlags& f) {
  cmd->add_option("--p", f.p, "barrier slope p > 0");
  cmd->add_option("--q", f.q, "barrier offset q > 0");
  cmd->add_option("--alpha", f.alpha, "diagonal regularizer");
  cmd->add_option("--theta", f.theta, "cooling factor in (0,1)");
  cmd->add_option("--beta1", f.beta1,
                  "starting barrier parameter (default: from spectrum)");
  cmd->add_option("--beta-min", f.beta_min, "cooling floor");
  cmd->add_option("--eps", f.eps, "inner tolerance on ||d-x||_inf");
  cmd->add_option("--max-inner", f.max_inner, "iteration cap per stage");
}

stcut::BarrierConfig to_config(const SolverFlags& f) {
  stcut::BarrierConfig cfg;
  cfg.p = f.p;
  cfg.q = f.q;
  cfg.beta1 = f.beta1;
  cfg.theta = f.theta;
  cfg.beta_min = f.beta_min;
  cfg.eps_inner = f.eps;
  cfg.max_inner = f.max_inner;
  return cfg;
}

json config_echo(const SolverFlags& f, std::uint64_t seed) {
  json j{{"p", f.p},
         {"q", f.q},
         {"alpha", f.alpha},
         {"theta", f.theta},
         {"beta_min", f.beta_min},
         {"eps", f.eps},
         {"max_inner", f.max_inner},
         {"seed", seed}};
  if (f.beta1)
    j["beta1"] = *f.beta1;
  else
    j["beta1"] = nullptr;
  return j;
}

stcut::Problem load_validated(const std::string& path, double alpha) {
  stcut::Problem pb;
  try {
    pb = stcut::read_problem_file(path, alpha);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (auto v = stcut::validate(pb); !v) throw UsageError("invalid instance: " + v.detail);
  return pb;
}

int run_gen(int n, std::uint64_t seed, int weight_max, int s1, int t1,
            const std::string& out) {
  if (n < 2) throw UsageError("gen: need --n >= 2");
  if (weight_max < 1) throw UsageError("gen: need --weight-max >= 1");
  if (s1 < 1 || s1 > n || t1 < 1 || t1 > n || s1 == t1)
    throw UsageError("gen: terminals must be distinct and in [1, n]");
  stcut::Problem pb = stcut::random_problem(n, seed, weight_max);
  pb.s = s1 - 1;
  pb.t = t1 - 1;
  stcut::write_problem_file(pb, out);
  std::cout << out << "\n";
  return 0;
}

int run_solve(const std::string& input, std::uint64_t seed,
              const SolverFlags& flags, bool trace) {
  const stcut::Problem pb = load_validated(input, flags.alpha);
  stcut::BarrierConfig cfg = to_config(flags);
  try {
    stcut::validate_config(cfg);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }

  stcut::SolveOptions opt;
  opt.trace = trace ? stcut::TraceLevel::Stages : stcut::TraceLevel::None;
  const stcut::RunReport rep = stcut::solve(pb, cfg, seed, opt);

  json j{{"input", input},
         {"n", pb.n},
         {"objm", rep.objm},
         {"ni", rep.total_inner_iters},
         {"beta_stages", rep.beta_stages},
         {"stalled_stages", rep.stalled_stages},
         {"final_h", rep.final_h},
         {"min_abs_x", rep.min_abs_x},
         {"assignment", rep.solution.assignment},
         {"config", config_echo(flags, seed)}};
  j["config"]["beta1_effective"] = stcut::initial_beta(pb, cfg);
  if (trace) {
    json stages = json::array();
    for (const auto& st : rep.trace)
      stages.push_back({{"beta", st.beta},
                        {"h", st.h},
                        {"step_norm", st.step_norm},
                        {"iters", st.iters},
                        {"stalled", st.stalled}});
    j["trace"] = std::move(stages);
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_bench(const std::vector<int>& sizes, int seeds,
              const std::string& obju, int weight_max,
              const SolverFlags& flags, const std::string& out) {
  if (sizes.empty()) throw UsageError("bench: need --sizes");
  if (seeds < 1) throw UsageError("bench: need --seeds >= 1");
  stcut::SuiteConfig suite;
  suite.sizes = sizes;
  suite.seeds_per_size = seeds;
  suite.weight_max = weight_max;
  suite.alpha = flags.alpha;
  suite.solver = to_config(flags);
  if (obju == "exact")
    suite.obju = stcut::ObjuMode::Exact;
  else if (obju == "trivial")
    suite.obju = stcut::ObjuMode::TrivialBound;
  else
    throw UsageError("bench: --obju must be 'exact' or 'trivial'");
  try {
    stcut::validate_config(suite.solver);
    if (suite.obju == stcut::ObjuMode::Exact)
      for (int n : sizes)
        if (n > 24) throw std::invalid_argument(
            "exact obju mode requires sizes <= 24");
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }

  const auto records = stcut::run_suite(suite);
  const std::string csv = stcut::suite_csv(records);
  std::ofstream os(out, std::ios::binary);
  if (!os) throw UsageError("bench: cannot write " + out);
  os << csv;
  os.close();

  // Echo the aggregate rows so a suite run is self-describing.
  for (std::size_t pos = 0; (pos = csv.find("# aggregate", pos)) !=
                            std::string::npos;) {
    const std::size_t eol = csv.find('\n', pos);
    std::cout << csv.substr(pos, eol - pos) << "\n";
    pos = eol;
  }
  std::cout << out << "\n";
  return 0;
}

int run_oracle(const std::string& input) {
  const stcut::Problem pb = load_validated(input, stcut::kDefaultAlpha);
  if (pb.n > 24) throw UsageError("oracle: instance too large, n <= 24");
  const stcut::OracleResult res = stcut::brute_force_cut(pb);
  json j{{"best_cut", res.best_cut},
         {"assignment", res.best_assignment},
         {"ties", res.ties},
         {"num_evaluated", res.num_evaluated}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"s-t max-cut by logarithmic-barrier deterministic annealing"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random instance file");
  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  int gen_wmax = 50, gen_s = 1, gen_t = 2;
  std::string gen_out;
  gen->add_option("--n", gen_n, "node count")->required();
  gen->add_option("--seed", gen_seed, "generator seed")->required();
  gen->add_option("--weight-max", gen_wmax, "max integer weight");
  gen->add_option("--s", gen_s, "terminal s (1-based)");
  gen->add_option("--t", gen_t, "terminal t (1-based)");
  gen->add_option("--out", gen_out, "output path")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "solve one instance");
  std::string solve_input;
  std::uint64_t solve_seed = 0;
  bool solve_trace = false;
  SolverFlags solve_flags;
  solve->add_option("--input", solve_input, "graph file")->required();
  solve->add_option("--seed", solve_seed, "initial point seed");
  add_solver_flags(solve, solve_flags);
  solve->add_flag("--trace", solve_trace, "include the per-stage trace");

  // bench
  auto* bench = app.add_subcommand("bench", "run a benchmark suite");
  std::vector<int> bench_sizes;
  int bench_seeds = 0;
  std::string bench_obju = "exact";
  int bench_wmax = 50;
  std::string bench_out;
  SolverFlags bench_flags;
  bench->add_option("--sizes", bench_sizes, "instance sizes")
      ->delimiter(',')
      ->required();
  bench->add_option("--seeds", bench_seeds, "seeds per size")->required();
  bench->add_option("--obju", bench_obju, "upper reference: exact|trivial");
  bench->add_option("--weight-max", bench_wmax, "max integer weight");
  add_solver_flags(bench, bench_flags);
  bench->add_option("--out", bench_out, "CSV output path")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact optimum (n <= 24)");
  std::string oracle_input;
  oracle->add_option("--input", oracle_input, "graph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*gen)
      return run_gen(gen_n, gen_seed, gen_wmax, gen_s, gen_t, gen_out);
    if (*solve)
      return run_solve(solve_input, solve_seed, solve_flags, solve_trace);
    if (*bench)
      return run_bench(bench_sizes, bench_seeds, bench_obju, bench_wmax,
                       bench_flags, bench_out);
    if (*oracle) return run_oracle(oracle_input);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
