#include "stcut/solver.hpp"

#include <cmath>
#include <random>

#include "stcut/eigen.hpp"
#include "stcut/rng.hpp"

namespace stcut {

namespace {

double inf_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double min_abs(std::span<const double> v) {
  double m = std::abs(v[0]);
  for (double x : v) m = std::min(m, std::abs(x));
  return m;
}

struct LineSearchResult {
  double mu;
  double value;
};

// Allocation-free h evaluation for the stage loop; mirrors the kernel call
// sequence of annealed_value so both produce identical bits.
struct AnnealedEval {
  const Problem& pb;
  const BarrierConfig& cfg;
  Exec exec;
  std::vector<double> y, scratch;

  AnnealedEval(const Problem& problem, const BarrierConfig& config, Exec e)
      : pb(problem), cfg(config), exec(e), y(problem.n), scratch(problem.n) {}

  double at(std::span<const double> x, double beta) {
    kernels::shifted_matvec(pb.weights.data(), x.size(), pb.alpha, x.data(),
                            scratch.data(), exec);
    const double quad =
        0.5 * kernels::dot(x.data(), scratch.data(), x.size(), exec);
    const std::ptrdiff_t bad =
        kernels::out_of_box_index(cfg.p, cfg.q, x.data(), x.size());
    if (bad >= 0) throw OutOfBoxError(static_cast<std::size_t>(bad), x[bad]);
    const double barrier =
        -kernels::barrier_log_sum(cfg.p, cfg.q, x.data(), x.size(), exec);
    return quad + beta * barrier;
  }

  double along(std::span<const double> x, std::span<const double> target,
               double mu, double beta) {
    for (std::size_t i = 0; i < x.size(); ++i)
      y[i] = x[i] + mu * (target[i] - x[i]);
    return at(y, beta);
  }
};

// Golden section on [0, 1] keeping the best evaluated trial; phi0 is the
// value at mu = 0 so callers can enforce the never-worse guarantee.
LineSearchResult golden_line_search(const std::function<double(double)>& phi,
                                    double phi0, double tol) {
  constexpr double kInvGolden = 0.6180339887498949;
  double a = 0.0, b = 1.0;
  double c = b - kInvGolden * (b - a);
  double d = a + kInvGolden * (b - a);
  double fc = phi(c);
  double fd = phi(d);
  double best_mu = fc <= fd ? c : d;
  double best_val = fc <= fd ? fc : fd;
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvGolden * (b - a);
      fc = phi(c);
      if (fc < best_val) {
        best_val = fc;
        best_mu = c;
      }
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvGolden * (b - a);
      fd = phi(d);
      if (fd < best_val) {
        best_val = fd;
        best_mu = d;
      }
    }
  }
  if (best_val >= phi0) return {0.0, phi0};
  return {best_mu, best_val};
}

}  // namespace

std::vector<double> initial_interior_point(const Problem& pb,
                                           const BarrierConfig& cfg,
                                           std::uint64_t seed) {
  const double scale = 0.1 * cfg.box_halfwidth();
  std::mt19937_64 rng(seed);
  std::vector<double> x(pb.n);
  for (int i = 0; i < pb.n; ++i) {
    double v;
    do {
      v = (2.0 * unit_double(rng) - 1.0) * scale;
    } while (v == 0.0);
    x[i] = v;
  }
  x[pb.t] = -x[pb.s];
  return x;
}

double golden_section(const std::function<double(double)>& f, double lo,
                      double hi, double tol) {
  constexpr double kInvGolden = 0.6180339887498949;
  double c = hi - kInvGolden * (hi - lo);
  double d = lo + kInvGolden * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  double best_mu = fc <= fd ? c : d;
  double best_val = fc <= fd ? fc : fd;
  while (hi - lo > tol) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvGolden * (hi - lo);
      fc = f(c);
      if (fc < best_val) {
        best_val = fc;
        best_mu = c;
      }
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvGolden * (hi - lo);
      fd = f(d);
      if (fd < best_val) {
        best_val = fd;
        best_mu = d;
      }
    }
  }
  return best_mu;
}

double line_search(const Problem& pb, const BarrierConfig& cfg,
                   std::span<const double> x, std::span<const double> target,
                   double beta, Exec exec) {
  std::vector<double> y(x.size());
  auto phi = [&](double mu) {
    for (std::size_t i = 0; i < x.size(); ++i)
      y[i] = x[i] + mu * (target[i] - x[i]);
    return annealed_value(pb, cfg, y, beta, exec);
  };
  const double phi0 = phi(0.0);
  return golden_line_search(phi, phi0, 1e-6).mu;
}

StageOutcome solve_stage(const Problem& pb, const BarrierConfig& cfg,
                         SolverState& st, Exec exec,
                         std::vector<double>* inner_h) {
  const double eps = cfg.effective_eps();
  AnnealedEval eval(pb, cfg, exec);
  StageOutcome out;
  out.h_end = eval.at(st.x, st.beta);
  if (inner_h) inner_h->push_back(out.h_end);

  for (;;) {
    const DirectionResult dir =
        descent_direction(pb, cfg, st.x, st.beta, exec);
    st.lambda = dir.lambda;
    out.step_norm = inf_norm(dir.step);
    if (out.step_norm < eps) break;
    if (out.iters >= cfg.max_inner) {
      out.stalled = true;
      break;
    }

    auto phi = [&](double mu) {
      return eval.along(st.x, dir.target, mu, st.beta);
    };
    const LineSearchResult ls = golden_line_search(phi, out.h_end, 1e-6);

    bool moved = false;
    for (std::size_t i = 0; i < st.x.size(); ++i) {
      const double xi = st.x[i] + ls.mu * (dir.target[i] - st.x[i]);
      if (xi != st.x[i]) moved = true;
      st.x[i] = xi;
    }
    if (!moved) {
      // The line search found no representable improvement; further
      // iterations would repeat the exact same computation.
      out.stalled = true;
      break;
    }
    ++out.iters;
    out.h_end = ls.value;
    if (inner_h) inner_h->push_back(out.h_end);
  }
  st.inner_iter = out.iters;
  return out;
}

RunReport solve(const Problem& pb, const BarrierConfig& cfg,
                std::uint64_t seed, const SolveOptions& opt) {
  if (auto v = validate(pb); !v)
    throw std::invalid_argument("solve: invalid problem: " + v.detail);
  validate_config(cfg);

  SolverState st;
  st.x = initial_interior_point(pb, cfg, seed);
  st.beta = initial_beta(pb, cfg);

  RunReport rep;
  const double exit_level = cfg.round_margin * cfg.box_halfwidth();
  for (;;) {
    std::vector<double> inner;
    StageOutcome so = solve_stage(pb, cfg, st, opt.exec,
                                  opt.trace == TraceLevel::Inner ? &inner
                                                                 : nullptr);
    ++st.outer_iter;
    rep.total_inner_iters += so.iters;
    if (so.stalled) ++rep.stalled_stages;
    rep.final_h = so.h_end;
    if (opt.trace != TraceLevel::None)
      rep.trace.push_back({st.beta, so.h_end, so.step_norm, so.iters,
                           so.stalled, std::move(inner)});
    if (min_abs(st.x) >= exit_level) break;
    st.beta *= cfg.theta;
    if (st.beta < cfg.beta_min) break;
  }

  rep.beta_stages = st.outer_iter;
  rep.min_abs_x = min_abs(st.x);
  rep.final_x = st.x;
  rep.solution = round_to_cut(pb, st.x);
  rep.objm = rep.solution.cut_weight;
  return rep;
}

CutSolution round_to_cut(const Problem& pb, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(pb.n))
    throw std::invalid_argument("round_to_cut: x has wrong length");
  CutSolution sol;
  sol.assignment.resize(pb.n);
  for (int i = 0; i < pb.n; ++i) sol.assignment[i] = x[i] < 0.0 ? -1 : 1;
  sol.assignment[pb.t] = -sol.assignment[pb.s];
  sol.cut_weight = cut_value(pb, sol.assignment);
  std::vector<double> xpm(sol.assignment.begin(), sol.assignment.end());
  sol.objective_f = quad_value(pb, xpm, Exec::Serial);
  return sol;
}

}  // namespace stcut
