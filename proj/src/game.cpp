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

#include "regretgame/game.hpp"

#include <cmath>
#include <set>

namespace regretgame {

void MixedStrategy::Validate() const {
  RequireArg(!probs.empty(), "MixedStrategy: empty");
  double s = 0;
  for (double p : probs) {
    RequireArg(std::isfinite(p) && p >= -kProbTol,
               "MixedStrategy: negative or non-finite entry");
    s += p;
  }
  RequireArg(std::fabs(s - 1.0) <= kProbTol * probs.size() + kProbTol,
             "MixedStrategy: entries sum to " + std::to_string(s));
}

MixedStrategy MixedStrategy::Uniform(int n) {
  RequireArg(n >= 1, "MixedStrategy::Uniform: n < 1");
  return MixedStrategy(std::vector<double>(n, 1.0 / n));
}

MixedStrategy MixedStrategy::Pure(int n, int index) {
  RequireArg(n >= 1 && index >= 0 && index < n,
             "MixedStrategy::Pure: index out of range");
  std::vector<double> p(n, 0.0);
  p[index] = 1.0;
  return MixedStrategy(std::move(p));
}

int Game::LearnerActionIndex(const std::string& name) const {
  for (int j = 0; j < num_learner_actions(); ++j) {
    if (learner_actions[j] == name) return j;
  }
  return -1;
}

void Game::Validate() const {
  const int m = num_optimizer_actions();
  const int n = num_learner_actions();
  RequireArg(m >= 1 && n >= 1, "Game: needs at least one action per player");
  RequireArg(std::isfinite(scale) && scale > 0, "Game: scale must be > 0");
  std::set<std::string> names;
  for (const auto& a : optimizer_actions) {
    RequireArg(!a.empty(), "Game: empty optimizer action name");
    RequireArg(names.insert(a).second,
               "Game: duplicate optimizer action name " + a);
  }
  names.clear();
  for (const auto& b : learner_actions) {
    RequireArg(!b.empty(), "Game: empty learner action name");
    RequireArg(names.insert(b).second,
               "Game: duplicate learner action name " + b);
  }
  auto check_matrix = [&](const std::vector<std::vector<double>>& u,
                          const char* who) {
    RequireArg(static_cast<int>(u.size()) == m,
               std::string("Game: ") + who + " matrix has wrong row count");
    for (const auto& row : u) {
      RequireArg(static_cast<int>(row.size()) == n,
                 std::string("Game: ") + who + " matrix is not rectangular");
      for (double v : row) {
        RequireArg(std::isfinite(v), std::string("Game: non-finite ") + who +
                                         " payoff");
        RequireArg(std::fabs(v) <= scale + 1e-12,
                   std::string("Game: ") + who + " payoff " +
                       std::to_string(v) + " exceeds scale " +
                       std::to_string(scale));
      }
    }
  };
  check_matrix(optimizer_payoffs, "optimizer");
  check_matrix(learner_payoffs, "learner");
}

double UtilityVsPure(const Game& game, const MixedStrategy& alpha, int b,
                     Player player) {
  RequireArg(alpha.size() == game.num_optimizer_actions(),
             "UtilityVsPure: alpha size mismatch");
  RequireArg(b >= 0 && b < game.num_learner_actions(),
             "UtilityVsPure: learner action out of range");
  const auto& u = player == Player::kOptimizer ? game.optimizer_payoffs
                                               : game.learner_payoffs;
  double s = 0;
  for (int a = 0; a < alpha.size(); ++a) s += alpha[a] * u[a][b];
  return s;
}

double Utility(const Game& game, const MixedStrategy& alpha,
               const MixedStrategy& beta, Player player) {
  RequireArg(beta.size() == game.num_learner_actions(),
             "Utility: beta size mismatch");
  double s = 0;
  for (int b = 0; b < beta.size(); ++b) {
    if (beta[b] == 0.0) continue;
    s += beta[b] * UtilityVsPure(game, alpha, b, player);
  }
  return s;
}

std::vector<int> BestResponses(const Game& game, const MixedStrategy& alpha,
                               double tol) {
  const int n = game.num_learner_actions();
  std::vector<double> vals(n);
  double best = -1e300;
  for (int b = 0; b < n; ++b) {
    vals[b] = UtilityVsPure(game, alpha, b, Player::kLearner);
    best = std::max(best, vals[b]);
  }
  std::vector<int> out;
  for (int b = 0; b < n; ++b) {
    if (vals[b] >= best - tol) out.push_back(b);
  }
  return out;
}

}  // namespace regretgame
