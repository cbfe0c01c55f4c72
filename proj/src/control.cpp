// Copyright 2026 The regretgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "regretgame/control.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "regretgame/lp.hpp"

namespace regretgame {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Coordinate of region r at state x (length n-1): the last region's
// coordinate is the constant 0.
inline double Coord(const ControlState& x, int r) {
  return r < static_cast<int>(x.size()) ? x[r] : 0.0;
}

std::vector<int> Intersect(const std::vector<int>& a,
                           const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

ControlState Displacement(const Game& game, const MixedStrategy& alpha) {
  const int n = game.num_learner_actions();
  double last = UtilityVsPure(game, alpha, n - 1, Player::kLearner);
  ControlState d(n - 1);
  for (int j = 0; j + 1 < n; ++j)
    d[j] = UtilityVsPure(game, alpha, j, Player::kLearner) - last;
  return d;
}

std::vector<int> RegionsOf(const ControlState& x, double tol) {
  const int n = static_cast<int>(x.size()) + 1;
  double vmax = 0;
  for (double v : x) vmax = std::max(vmax, v);
  std::vector<int> out;
  for (int r = 0; r < n; ++r) {
    if (Coord(x, r) >= vmax - tol) out.push_back(r);
  }
  return out;
}

double AnnotatedPolicy::TotalDuration() const {
  double s = 0;
  for (const auto& step : steps) s += step.duration;
  return s;
}

Policy AnnotatedPolicy::ToPolicy() const {
  Policy p;
  for (const auto& step : steps) p.steps.push_back({step.alpha, step.duration});
  return p;
}

AnnotatedPolicy Subdivide(const Game& game, const Policy& policy) {
  game.Validate();
  policy.Validate(game.num_optimizer_actions());
  const int n = game.num_learner_actions();

  AnnotatedPolicy out;
  ControlState p(n - 1, 0.0);
  out.waypoints.push_back(p);

  for (const auto& step : policy.steps) {
    const ControlState d = Displacement(game, step.alpha);
    const double t = step.duration;

    // Parameters s in (0, 1) where the attained maximum can change: points
    // where two region coordinates cross while also being maximal.
    std::vector<double> cuts;
    for (int r = 0; r < n; ++r) {
      for (int q = r + 1; q < n; ++q) {
        double a = Coord(p, r) - Coord(p, q);
        double b = t * (Coord(d, r) - Coord(d, q));
        if (std::fabs(b) < 1e-14) continue;
        double s = -a / b;
        if (s <= 1e-12 || s >= 1 - 1e-12) continue;
        double vmax = 0, vr = 0;
        for (int c = 0; c < n; ++c) {
          double v = Coord(p, c) + s * t * Coord(d, c);
          vmax = std::max(vmax, v);
          if (c == r) vr = v;
        }
        if (vr >= vmax - kProbTol) cuts.push_back(s);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double a, double b) { return b - a <= 1e-12; }),
               cuts.end());
    cuts.push_back(1.0);

    double used = 0, prev = 0;
    for (size_t c = 0; c < cuts.size(); ++c) {
      bool last = c + 1 == cuts.size();
      double dur = last ? t - used : t * (cuts[c] - prev);
      if (dur < 0) dur = 0;
      used += dur;
      prev = cuts[c];

      ControlState next(p);
      for (int j = 0; j + 1 < n; ++j) next[j] += dur * d[j];

      std::vector<int> adm = Intersect(RegionsOf(p), RegionsOf(next));
      if (adm.empty())
        adm = Intersect(RegionsOf(p, kProbTol * 10),
                        RegionsOf(next, kProbTol * 10));
      Require(!adm.empty(), "Subdivide: no common region for a sub-step");
      int label = adm[0];
      for (int r : adm) {
        if (UtilityVsPure(game, step.alpha, r, Player::kOptimizer) >
            UtilityVsPure(game, step.alpha, label, Player::kOptimizer))
          label = r;
      }
      out.steps.push_back({step.alpha, dur, label});
      out.waypoints.push_back(next);
      p = std::move(next);
    }
  }
  return out;
}

AnnotatedPolicy MergeSameLabel(const AnnotatedPolicy& annotated) {
  RequireArg(annotated.waypoints.size() == annotated.steps.size() + 1,
             "MergeSameLabel: waypoint count mismatch");
  AnnotatedPolicy out;
  if (annotated.steps.empty()) {
    out.waypoints = annotated.waypoints;
    return out;
  }
  out.waypoints.push_back(annotated.waypoints[0]);
  size_t i = 0;
  while (i < annotated.steps.size()) {
    size_t j = i;
    double total = 0;
    std::vector<double> mix(annotated.steps[i].alpha.size(), 0.0);
    while (j < annotated.steps.size() &&
           annotated.steps[j].label == annotated.steps[i].label) {
      const auto& step = annotated.steps[j];
      total += step.duration;
      for (size_t a = 0; a < mix.size(); ++a)
        mix[a] += step.duration * step.alpha[static_cast<int>(a)];
      ++j;
    }
    MixedStrategy alpha = annotated.steps[i].alpha;
    if (total > 0) {
      for (double& v : mix) v /= total;
      alpha = MixedStrategy(mix);
    }
    out.steps.push_back({alpha, total, annotated.steps[i].label});
    out.waypoints.push_back(annotated.waypoints[j]);
    i = j;
  }
  return out;
}

double Evaluate(const Game& game, const Policy& policy) {
  AnnotatedPolicy ann = Subdivide(game, policy);
  double value = 0, total = 0;
  for (const auto& step : ann.steps) {
    value +=
        step.duration * UtilityVsPure(game, step.alpha, step.label,
                                      Player::kOptimizer);
    total += step.duration;
  }
  Require(total > 0, "Evaluate: zero total duration");
  return value / total;
}

std::optional<double> CycleValue(const Game& game,
                                 const std::vector<AnnotatedStep>& steps,
                                 const ControlState& start) {
  game.Validate();
  const int n = game.num_learner_actions();
  RequireArg(!steps.empty(), "CycleValue: no steps");
  RequireArg(static_cast<int>(start.size()) == n - 1,
             "CycleValue: start state size mismatch");
  constexpr double kGeomTol = 1e-7;

  double total = 0, value = 0;
  ControlState p = start;
  for (const auto& step : steps) {
    RequireArg(step.label >= 0 && step.label < n,
               "CycleValue: label out of range");
    RequireArg(step.duration >= 0, "CycleValue: negative duration");
    step.alpha.Validate();
    ControlState d = Displacement(game, step.alpha);
    ControlState next(p);
    for (int j = 0; j + 1 < n; ++j) next[j] += step.duration * d[j];
    // Both endpoints inside the labeled cone; convexity covers the segment.
    for (const ControlState* x : {&p, &next}) {
      double vmax = 0;
      for (double v : *x) vmax = std::max(vmax, v);
      if (Coord(*x, step.label) < vmax - kGeomTol) return std::nullopt;
    }
    value += step.duration *
             UtilityVsPure(game, step.alpha, step.label, Player::kOptimizer);
    total += step.duration;
    p = std::move(next);
  }
  RequireArg(total > 0, "CycleValue: zero total duration");

  double nrm = 0;
  for (double v : start) nrm += v * v;
  if (nrm <= kGeomTol * kGeomTol) {
    for (double v : p) {
      if (std::fabs(v) > kGeomTol) return std::nullopt;
    }
  } else {
    double lambda = 0;
    for (size_t j = 0; j < start.size(); ++j) lambda += p[j] * start[j];
    lambda /= nrm;
    if (lambda < 1 - 1e-9) return std::nullopt;
    double span = 1;
    for (double v : start) span = std::max(span, std::fabs(v));
    for (size_t j = 0; j < start.size(); ++j) {
      if (std::fabs(p[j] - lambda * start[j]) > kGeomTol * span)
        return std::nullopt;
    }
  }
  return value / total;
}

namespace {

struct Candidate {
  double value = kNegInf;
  std::vector<int> key;
  std::vector<int> labels;
  std::vector<int> alpha_idx;
  std::vector<double> durations;
  double lambda = 1.0;
  bool cycle = false;
  ControlState p0;
};

// Higher value wins; ties resolve to the lexicographically smallest key, so
// the search result does not depend on evaluation order.
bool Better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.key < b.key;
}

std::vector<int> MakeKey(bool cycle, const std::vector<int>& labels,
                         const std::vector<int>& alphas, int lambda_idx) {
  std::vector<int> key;
  key.push_back(cycle ? 1 : 0);
  key.push_back(static_cast<int>(labels.size()));
  key.insert(key.end(), labels.begin(), labels.end());
  key.insert(key.end(), alphas.begin(), alphas.end());
  key.push_back(lambda_idx);
  return key;
}

void GridRec(int left, int slots, std::vector<int>& counts,
             std::vector<MixedStrategy>& out, int resolution) {
  if (slots == 1) {
    counts.push_back(left);
    std::vector<double> p(counts.size());
    for (size_t i = 0; i < counts.size(); ++i)
      p[i] = static_cast<double>(counts[i]) / resolution;
    out.push_back(MixedStrategy(std::move(p)));
    counts.pop_back();
    return;
  }
  for (int c = 0; c <= left; ++c) {
    counts.push_back(c);
    GridRec(left - c, slots - 1, counts, out, resolution);
    counts.pop_back();
  }
}

std::vector<MixedStrategy> SimplexGrid(int dims, int resolution) {
  std::vector<MixedStrategy> out;
  std::vector<int> counts;
  GridRec(resolution, dims, counts, out, resolution);
  return out;
}

void SequencesRec(int n, int left, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (int r = 0; r < n; ++r) {
    if (!cur.empty() && cur.back() == r) continue;
    cur.push_back(r);
    SequencesRec(n, left - 1, cur, out);
    cur.pop_back();
  }
}

// Everything fixed during one search, shared across threads read-only.
struct SearchContext {
  const Game* game = nullptr;
  int n = 0;
  std::vector<MixedStrategy> grid;
  std::vector<ControlState> disp;            // per grid point
  std::vector<std::vector<double>> uopt;     // per grid point, per column
  std::vector<double> colmax;                // max optimizer payoff per column
  // Bit r set when the (negated) displacement lies in region r's closure,
  // with slack so nothing the LP tolerances would accept is ever pruned.
  // Empty when n > 32 (no pruning).
  std::vector<std::uint32_t> dmask;
  std::vector<std::uint32_t> negmask;
  std::vector<double> lambdas;
  bool include_cycles = false;
  double p0_bound = 0;
  mutable std::atomic<double> best_bound{kNegInf};

  double ExtDisp(int g, int r) const {
    return r < n - 1 ? disp[g][r] : 0.0;
  }
};

std::uint32_t RegionMask(const SearchContext& ctx, const ControlState& x) {
  constexpr double kSlack = 1e-7;
  double vmax = 0.0;
  for (double v : x) vmax = std::max(vmax, v);
  std::uint32_t mask = 0;
  for (int r = 0; r < ctx.n; ++r) {
    const double coord = r < ctx.n - 1 ? x[r] : 0.0;
    if (coord >= vmax - kSlack) mask |= 1u << r;
  }
  return mask;
}

// Displacement parallel to the boundary shared by the regions in `bits`
// (pointing along it either way, or zero).
bool ParallelToBoundary(const SearchContext& ctx, int g, std::uint32_t bits) {
  return (ctx.dmask[g] & bits) == bits || (ctx.negmask[g] & bits) == bits;
}

// Membership rows for waypoint `w` of the label sequence: one LessEq row
// per rival region q. coeff(var) is filled by the caller for the layout in
// use (path, fixed-lambda cycle, or free-start cycle).
template <typename CoeffFn>
void AddMembershipRows(LinearProgram& lp, const SearchContext& ctx,
                       int region, int num_vars, CoeffFn&& coeff) {
  for (int q = 0; q < ctx.n; ++q) {
    if (q == region) continue;
    std::vector<double> row(num_vars, 0.0);
    for (int v = 0; v < num_vars; ++v) row[v] = coeff(v, q) - coeff(v, region);
    lp.AddLessEq(std::move(row), 0.0);
  }
}

std::optional<Candidate> SolveCandidate(const SearchContext& ctx,
                                        const std::vector<int>& seq,
                                        const std::vector<int>& alphas,
                                        int lambda_idx) {
  const int len = static_cast<int>(seq.size());
  const int n = ctx.n;
  const bool cycle = lambda_idx >= 0;
  const double lambda = cycle ? ctx.lambdas[lambda_idx] : 1.0;
  const bool free_start = cycle && std::fabs(lambda - 1.0) < 1e-12;
  const int num_vars = len + (free_start ? n - 1 : 0);

  LinearProgram lp(num_vars);
  for (int l = 0; l < len; ++l) lp.objective[l] = ctx.uopt[alphas[l]][seq[l]];
  {
    std::vector<double> ones(num_vars, 0.0);
    for (int l = 0; l < len; ++l) ones[l] = 1.0;
    lp.AddEq(std::move(ones), 1.0);
  }
  if (free_start) {
    for (int v = len; v < num_vars; ++v) {
      lp.SetFree(v);
      std::vector<double> row(num_vars, 0.0);
      row[v] = 1.0;
      lp.AddLessEq(row, ctx.p0_bound);
      row[v] = -1.0;
      lp.AddLessEq(std::move(row), ctx.p0_bound);
    }
    // Closed loop: zero net displacement.
    for (int r = 0; r + 1 < n; ++r) {
      std::vector<double> row(num_vars, 0.0);
      for (int l = 0; l < len; ++l) row[l] = ctx.ExtDisp(alphas[l], r);
      lp.AddEq(std::move(row), 0.0);
    }
  }

  // Coordinate r of waypoint i as a linear form over the variables.
  auto wcoeff = [&](int i, int v, int r) -> double {
    if (v < len) {
      double c = v < i ? ctx.ExtDisp(alphas[v], r) : 0.0;
      if (cycle && !free_start)
        c += ctx.ExtDisp(alphas[v], r) / (lambda - 1.0);
      return c;
    }
    return (v - len) == r ? 1.0 : 0.0;  // free start coordinate
  };
  const int wfirst = cycle ? 0 : 1;
  for (int i = wfirst; i <= len; ++i) {
    auto coeff = [&](int v, int r) { return wcoeff(i, v, r); };
    if (i >= 1)
      AddMembershipRows(lp, ctx, seq[i - 1], num_vars, coeff);
    if (i < len && (i >= 1 || cycle))
      AddMembershipRows(lp, ctx, seq[i], num_vars, coeff);
  }

  LpResult res = LpSolve(lp);
  if (res.status != LpStatus::kOptimal) return std::nullopt;

  Candidate cand;
  cand.value = res.objective;
  cand.cycle = cycle;
  cand.lambda = lambda;
  cand.labels = seq;
  cand.alpha_idx = alphas;
  cand.durations.assign(res.x.begin(), res.x.begin() + len);
  for (double& d : cand.durations) {
    if (d < 0) d = 0;
  }
  cand.p0.assign(n - 1, 0.0);
  if (free_start) {
    cand.p0.assign(res.x.begin() + len, res.x.end());
  } else if (cycle) {
    for (int r = 0; r + 1 < n; ++r) {
      double total = 0;
      for (int l = 0; l < len; ++l)
        total += cand.durations[l] * ctx.ExtDisp(alphas[l], r);
      cand.p0[r] = total / (lambda - 1.0);
    }
  }
  cand.key = MakeKey(cycle, seq, alphas, std::max(lambda_idx, 0));
  return cand;
}

// All candidates for one (sequence, first-alpha) block; updates `best`.
void EvaluateBlock(const SearchContext& ctx, const std::vector<int>& seq,
                   bool cycle, int g0, Candidate& best) {
  const int len = static_cast<int>(seq.size());
  std::vector<int> alphas(len);
  alphas[0] = g0;
  const int grid_size = static_cast<int>(ctx.grid.size());

  // Geometric screens. Consecutive labels are distinct, so the waypoint
  // between them sits on the shared boundary of the two regions. Pruned
  // candidates are either LP-infeasible or force a zero duration, which
  // collapses them onto a shorter sequence that is enumerated separately
  // and preferred by the tie-break.
  const bool masks = !ctx.dmask.empty() && len >= 2;
  const std::uint32_t pair_bits =
      masks ? (1u << seq[0]) | (1u << seq[1]) : 0u;
  if (masks && !cycle) {
    // Path: the first waypoint is t1 * d(g0), so d(g0) must lie in both of
    // the first two regions.
    if ((ctx.dmask[g0] & pair_bits) != pair_bits) return;
  }
  // Two-step cycle with at most three regions: the shared boundary is a ray
  // (or the origin) holding every waypoint, so both displacements must run
  // along it.
  const bool ray_cycle = masks && cycle && len == 2 && ctx.n <= 3;
  if (ray_cycle && !ParallelToBoundary(ctx, g0, pair_bits)) return;

  // Max attainable over later slots; used to prune on the prefix.
  std::vector<double> suffix_cap(len + 1, kNegInf);
  for (int l = len - 1; l >= 1; --l)
    suffix_cap[l] = std::max(suffix_cap[l + 1], ctx.colmax[seq[l]]);

  auto consider = [&](const std::optional<Candidate>& cand) {
    if (cand && Better(*cand, best)) {
      best = *cand;
      double cur = ctx.best_bound.load(std::memory_order_relaxed);
      while (cur < cand->value &&
             !ctx.best_bound.compare_exchange_weak(
                 cur, cand->value, std::memory_order_relaxed)) {
      }
    }
  };

  // Depth-first over the remaining alpha slots.
  auto rec = [&](auto&& self, int slot, double prefix_max) -> void {
    double bound = ctx.best_bound.load(std::memory_order_relaxed);
    if (std::max(prefix_max, suffix_cap[slot]) < bound) return;
    if (slot == len) {
      if (!cycle) {
        consider(SolveCandidate(ctx, seq, alphas, -1));
      } else {
        for (size_t li = 0; li < ctx.lambdas.size(); ++li)
          consider(SolveCandidate(ctx, seq, alphas, static_cast<int>(li)));
      }
      return;
    }
    for (int g = 0; g < grid_size; ++g) {
      if (ray_cycle && !ParallelToBoundary(ctx, g, pair_bits)) continue;
      alphas[slot] = g;
      self(self, slot + 1,
           std::max(prefix_max, ctx.uopt[g][seq[slot]]));
    }
  };
  rec(rec, 1, ctx.uopt[g0][seq[0]]);
}

}  // namespace

SearchResult SearchPolicies(const Game& game, const SearchOptions& options) {
  game.Validate();
  RequireArg(options.max_steps >= 1, "SearchPolicies: max_steps must be >= 1");
  RequireArg(options.resolution >= 1,
             "SearchPolicies: resolution must be >= 1");
  const int n = game.num_learner_actions();
  const int m = game.num_optimizer_actions();

  SearchContext ctx;
  ctx.game = &game;
  ctx.n = n;
  ctx.grid = SimplexGrid(m, options.resolution);
  ctx.include_cycles = options.include_cycles;
  ctx.p0_bound = 4 * game.scale;
  ctx.lambdas = options.lambdas;
  if (ctx.lambdas.empty()) {
    for (int i = 0; i <= 30; ++i) ctx.lambdas.push_back(1.0 + 0.1 * i);
  }
  for (double l : ctx.lambdas)
    RequireArg(l >= 1.0, "SearchPolicies: cycle lambdas must be >= 1");

  const int grid_size = static_cast<int>(ctx.grid.size());
  ctx.disp.resize(grid_size);
  ctx.uopt.resize(grid_size);
  for (int g = 0; g < grid_size; ++g) {
    ctx.disp[g] = Displacement(game, ctx.grid[g]);
    ctx.uopt[g].resize(n);
    for (int j = 0; j < n; ++j)
      ctx.uopt[g][j] =
          UtilityVsPure(game, ctx.grid[g], j, Player::kOptimizer);
  }
  ctx.colmax.assign(n, kNegInf);
  for (int j = 0; j < n; ++j)
    for (int g = 0; g < grid_size; ++g)
      ctx.colmax[j] = std::max(ctx.colmax[j], ctx.uopt[g][j]);
  if (n <= 32) {
    ctx.dmask.resize(grid_size);
    ctx.negmask.resize(grid_size);
    for (int g = 0; g < grid_size; ++g) {
      ctx.dmask[g] = RegionMask(ctx, ctx.disp[g]);
      ControlState neg = ctx.disp[g];
      for (double& v : neg) v = -v;
      ctx.negmask[g] = RegionMask(ctx, neg);
    }
  }

  // Single steps, solved in closed form: feasible when the displacement
  // lies in the labeled cone. Guarantees a result even if every longer
  // sequence is infeasible, and seeds the prune bound.
  Candidate best;
  for (int r = 0; r < n; ++r) {
    for (int g = 0; g < grid_size; ++g) {
      bool ok = true;
      for (int q = 0; q < n && ok; ++q) {
        if (ctx.ExtDisp(g, r) < ctx.ExtDisp(g, q) - 1e-12) ok = false;
      }
      if (!ok) continue;
      Candidate cand;
      cand.value = ctx.uopt[g][r];
      cand.labels = {r};
      cand.alpha_idx = {g};
      cand.durations = {1.0};
      cand.p0.assign(n - 1, 0.0);
      cand.key = MakeKey(false, cand.labels, cand.alpha_idx, 0);
      if (Better(cand, best)) best = cand;
    }
  }
  Require(best.value > kNegInf, "SearchPolicies: no single-step candidate");
  ctx.best_bound.store(best.value, std::memory_order_relaxed);

  // Longer sequences: one block per (sequence, kind, first alpha).
  struct Block {
    const std::vector<int>* seq;
    bool cycle;
    int g0;
  };
  std::vector<std::vector<int>> seqs;
  for (int len = 2; len <= options.max_steps; ++len) {
    std::vector<int> cur;
    SequencesRec(n, len, cur, seqs);
  }
  std::vector<Block> blocks;
  for (const auto& seq : seqs) {
    double cap = kNegInf;
    for (int r : seq) cap = std::max(cap, ctx.colmax[r]);
    // Strict comparison: sequences that could only tie stay in, so the
    // deterministic tie-break sees every value-maximal candidate.
    if (cap < best.value) continue;
    for (int g0 = 0; g0 < grid_size; ++g0) {
      blocks.push_back({&seq, false, g0});
      if (ctx.include_cycles) blocks.push_back({&seq, true, g0});
    }
  }

  int threads = options.threads;
#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#else
  threads = 1;
#endif

  if (threads == 1 || blocks.empty()) {
    for (const auto& b : blocks)
      EvaluateBlock(ctx, *b.seq, b.cycle, b.g0, best);
  } else {
#ifdef _OPENMP
    std::vector<Candidate> local(threads);
    for (auto& c : local) c = best;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (size_t i = 0; i < blocks.size(); ++i) {
      const auto& b = blocks[i];
      EvaluateBlock(ctx, *b.seq, b.cycle, b.g0, local[omp_get_thread_num()]);
    }
    for (const auto& c : local) {
      if (Better(c, best)) best = c;
    }
#endif
  }

  // Assemble the result; zero-duration steps are dropped.
  SearchResult result;
  result.value = best.value;
  result.kind = best.cycle ? PolicyKind::kCycle : PolicyKind::kPath;
  result.lambda = best.cycle ? best.lambda : 1.0;
  ControlState p = best.p0;
  result.annotated.waypoints.push_back(p);
  for (size_t l = 0; l < best.labels.size(); ++l) {
    if (best.durations[l] <= 1e-12 && best.labels.size() > 1) continue;
    const MixedStrategy& alpha = ctx.grid[best.alpha_idx[l]];
    result.policy.steps.push_back({alpha, best.durations[l]});
    result.annotated.steps.push_back(
        {alpha, best.durations[l], best.labels[l]});
    for (int r = 0; r + 1 < n; ++r)
      p[r] += best.durations[l] * ctx.ExtDisp(best.alpha_idx[l], r);
    result.annotated.waypoints.push_back(p);
  }
  return result;
}

}  // namespace regretgame
