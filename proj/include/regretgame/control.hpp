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

#ifndef REGRETGAME_CONTROL_HPP_
#define REGRETGAME_CONTROL_HPP_

#include <optional>
#include <vector>

#include "regretgame/game.hpp"
#include "regretgame/optimizers.hpp"

namespace regretgame {

// Mean-based learner dynamics against a slow commitment schedule reduce to
// steering a point through a fan of convex cones. The state is the learner's
// cumulative reward gaps relative to its last action: x_j = sigma_j -
// sigma_N for j < N (length N - 1). Playing alpha moves the state at
// velocity Displacement(alpha); the learner's response is the region the
// state is in, and the optimizer banks u_opt(alpha, response) per unit time.
using ControlState = std::vector<double>;

// d_j(alpha) = u_lrn(alpha, b_j) - u_lrn(alpha, b_N), j < N. Linear in
// alpha.
ControlState Displacement(const Game& game, const MixedStrategy& alpha);

// Regions the state lies in (boundaries belong to every adjacent region):
// region j < N - 1 where x_j attains max(x_1..x_{N-1}, 0), region N - 1
// where 0 attains it. Returned sorted, never empty.
std::vector<int> RegionsOf(const ControlState& x, double tol = kProbTol);

struct AnnotatedStep {
  MixedStrategy alpha;
  double duration = 0;
  int label = 0;  // learner action / region the step is charged to
};

struct AnnotatedPolicy {
  std::vector<AnnotatedStep> steps;
  // steps.size() + 1 states; waypoints[i] - waypoints[i-1] equals
  // duration_i * Displacement(alpha_i) by construction.
  std::vector<ControlState> waypoints;

  double TotalDuration() const;
  Policy ToPolicy() const;  // drop labels
};

// Splits steps wherever the trajectory (from the origin) crosses a region
// boundary, so each sub-step stays inside one region, then labels it with
// the optimizer-best region containing both its endpoints (ties toward the
// lowest region index). Total duration is preserved exactly.
AnnotatedPolicy Subdivide(const Game& game, const Policy& policy);

// Fuses consecutive same-label steps: durations add, alphas combine
// duration-weighted. The annotated average is unchanged by linearity.
// Re-evaluating the merged steps as a plain policy can only increase the
// value: a fused detour becomes its chord, which may lie on a region
// boundary where the optimistic label rule picks the better side.
AnnotatedPolicy MergeSameLabel(const AnnotatedPolicy& annotated);

// Duration-averaged optimizer payoff of the subdivided policy:
// sum_i t_i * u_opt(alpha_i, label_i) / sum_i t_i. Invariant under
// rescaling all durations and under Subdivide.
double Evaluate(const Game& game, const Policy& policy);

// Average payoff of a closed loop: the trajectory from `start` must stay in
// each step's labeled region and end at lambda * start for some lambda >= 1
// (growing the state only relaxes future constraints, so the loop can be
// repeated forever). nullopt when the steps leave their regions or the
// endpoint is not a lambda * start with lambda >= 1.
std::optional<double> CycleValue(const Game& game,
                                 const std::vector<AnnotatedStep>& steps,
                                 const ControlState& start);

struct SearchOptions {
  int max_steps = 3;
  int resolution = 20;        // alpha grid: multiples of 1/resolution
  bool include_cycles = true;
  std::vector<double> lambdas;  // cycle growth grid; empty = 1.0 to 4.0 by 0.1
  int threads = 1;              // 1 = serial reference path, 0 = OpenMP default
};

enum class PolicyKind { kPath, kCycle };

struct SearchResult {
  double value = 0;  // certified lower bound on the best average payoff
  PolicyKind kind = PolicyKind::kPath;
  double lambda = 1.0;  // cycle growth factor (1.0 for paths)
  Policy policy;
  AnnotatedPolicy annotated;  // labels and waypoints (cycles: from P0)
};

// Exhaustive search over label sequences (consecutive labels distinct, up
// to max_steps) and grid alphas; step durations are optimized exactly by a
// small LP per candidate. Cycle candidates additionally sweep the lambda
// grid. Deterministic for fixed options, independent of thread count.
SearchResult SearchPolicies(const Game& game, const SearchOptions& options);

}  // namespace regretgame

#endif  // REGRETGAME_CONTROL_HPP_
