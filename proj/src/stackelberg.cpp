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

#include "regretgame/stackelberg.hpp"

#include <cmath>
#include <limits>

#include "regretgame/lp.hpp"

namespace regretgame {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

MixedStrategy CleanStrategy(std::vector<double> x) {
  double s = 0;
  for (double& v : x) {
    if (v < 0) v = 0;
    s += v;
  }
  Require(s > 0.5, "CleanStrategy: LP returned a degenerate simplex point");
  for (double& v : x) v /= s;
  return MixedStrategy(std::move(x));
}

}  // namespace

StackelbergSolution Stackelberg(const Game& game) {
  game.Validate();
  const int m = game.num_optimizer_actions();
  const int n = game.num_learner_actions();

  StackelbergSolution sol;
  sol.column_values.assign(n, kNegInf);
  std::vector<MixedStrategy> column_alphas(n);

  for (int b = 0; b < n; ++b) {
    // Over alpha in the simplex with b a learner best response, maximize the
    // optimizer's payoff against b.
    LinearProgram lp(m);
    for (int a = 0; a < m; ++a) lp.objective[a] = game.u_opt(a, b);
    lp.AddEq(std::vector<double>(m, 1.0), 1.0);
    for (int k = 0; k < n; ++k) {
      if (k == b) continue;
      std::vector<double> row(m);
      for (int a = 0; a < m; ++a) row[a] = game.u_lrn(a, k) - game.u_lrn(a, b);
      lp.AddLessEq(std::move(row), 0.0);
    }
    LpResult res = LpSolve(lp);
    if (res.status == LpStatus::kInfeasible) continue;
    Require(res.status == LpStatus::kOptimal,
            "Stackelberg: column LP did not solve");
    sol.column_values[b] = res.objective;
    column_alphas[b] = CleanStrategy(res.x);
  }

  double best = kNegInf;
  for (int b = 0; b < n; ++b) best = std::max(best, sol.column_values[b]);
  Require(best > kNegInf, "Stackelberg: no feasible column");
  // The learner's optimistic tie-breaking leaves value ties across columns
  // free; they resolve to the highest action index as a fixed convention
  // (the bundled 2x3 game ties Left and Right at 0 and resolves to Right).
  int pick = -1;
  for (int b = 0; b < n; ++b) {
    if (sol.column_values[b] >= best - kProbTol) pick = b;
  }
  sol.response = pick;
  sol.value = sol.column_values[pick];
  sol.commitment = column_alphas[pick];
  return sol;
}

DominanceResult IsWeaklyDominated(const Game& game, int learner_action) {
  game.Validate();
  const int m = game.num_optimizer_actions();
  const int n = game.num_learner_actions();
  RequireArg(learner_action >= 0 && learner_action < n,
             "IsWeaklyDominated: action out of range");
  RequireArg(n >= 2, "IsWeaklyDominated: needs at least two learner actions");

  // Feasibility: a mixture beta over the other columns with
  // u_lrn(a, beta) >= u_lrn(a, learner_action) for every optimizer row.
  LinearProgram lp(n);
  lp.AddEq(std::vector<double>(n, 1.0), 1.0);
  {
    std::vector<double> fix(n, 0.0);
    fix[learner_action] = 1.0;
    lp.AddEq(std::move(fix), 0.0);
  }
  for (int a = 0; a < m; ++a) {
    std::vector<double> row(n);
    for (int k = 0; k < n; ++k) row[k] = -game.u_lrn(a, k);
    lp.AddLessEq(std::move(row), -game.u_lrn(a, learner_action));
  }
  LpResult res = LpSolve(lp);
  DominanceResult out;
  if (res.status == LpStatus::kOptimal) {
    out.dominated = true;
    out.mixture = CleanStrategy(res.x);
    out.mixture.probs[learner_action] = 0.0;
  }
  return out;
}

Commitment ConservativeCommitment(const Game& game, double delta) {
  RequireArg(delta > 0 && delta < 1,
             "ConservativeCommitment: delta must be in (0, 1)");
  StackelbergSolution sol = Stackelberg(game);
  const int m = game.num_optimizer_actions();
  const int n = game.num_learner_actions();
  const int b = sol.response;

  Commitment out;
  out.delta = delta;
  out.target_response = b;
  if (n == 1) {
    // No rival actions: the commitment is trivially safe.
    out.strategy = sol.commitment;
    out.margin = std::numeric_limits<double>::infinity();
    return out;
  }

  // maximize kappa s.t. alpha' in the simplex and
  // u_lrn(alpha', b) - u_lrn(alpha', k) >= kappa for all k != b.
  LinearProgram lp(m + 1);
  lp.objective[m] = 1.0;
  lp.SetFree(m);
  {
    std::vector<double> ones(m + 1, 1.0);
    ones[m] = 0.0;
    lp.AddEq(std::move(ones), 1.0);
  }
  for (int k = 0; k < n; ++k) {
    if (k == b) continue;
    std::vector<double> row(m + 1);
    for (int a = 0; a < m; ++a) row[a] = game.u_lrn(a, k) - game.u_lrn(a, b);
    row[m] = 1.0;
    lp.AddLessEq(std::move(row), 0.0);
  }
  LpResult res = LpSolve(lp);
  Require(res.status == LpStatus::kOptimal,
          "ConservativeCommitment: margin LP did not solve");
  const double kappa = res.objective;
  if (kappa <= kProbTol) {
    throw DominatedResponseError(
        "ConservativeCommitment: Stackelberg response " +
        game.learner_actions[b] +
        " cannot be made a strict best response (kappa = " +
        std::to_string(kappa) + "); it is weakly dominated");
  }
  MixedStrategy prime = CleanStrategy(
      std::vector<double>(res.x.begin(), res.x.begin() + m));

  std::vector<double> mixed(m);
  for (int a = 0; a < m; ++a)
    mixed[a] = (1 - delta) * sol.commitment[a] + delta * prime[a];
  out.strategy = MixedStrategy(std::move(mixed));
  out.strategy.Validate();

  // Measured worst-case advantage of the target; at least delta * kappa.
  double margin = std::numeric_limits<double>::infinity();
  double target = UtilityVsPure(game, out.strategy, b, Player::kLearner);
  for (int k = 0; k < n; ++k) {
    if (k == b) continue;
    margin = std::min(
        margin, target - UtilityVsPure(game, out.strategy, k, Player::kLearner));
  }
  out.margin = margin;
  Require(margin >= delta * kappa - kProbTol,
          "ConservativeCommitment: margin fell below delta * kappa");
  return out;
}

}  // namespace regretgame
