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

#include "regretgame/builtin_games.hpp"

#include <cmath>
#include <random>

namespace regretgame {

Game BaitAndSwitchGame(double eps) {
  RequireArg(eps >= 0 && eps < 1, "BaitAndSwitchGame: eps must be in [0, 1)");
  Game g;
  g.optimizer_actions = {"Top", "Bottom"};
  g.learner_actions = {"Left", "Mid", "Right"};
  g.optimizer_payoffs = {{0, -2, -2}, {0, -2, 2}};
  g.learner_payoffs = {{eps, -1, 0}, {-1, 1, 0}};
  g.scale = 2.0;
  g.Validate();
  return g;
}

Game MatchingPennies() {
  Game g;
  g.optimizer_actions = {"Heads", "Tails"};
  g.learner_actions = {"Heads", "Tails"};
  g.optimizer_payoffs = {{1, -1}, {-1, 1}};
  g.learner_payoffs = {{-1, 1}, {1, -1}};
  g.scale = 1.0;
  g.Validate();
  return g;
}

Game TwoActionCap() {
  Game g;
  g.optimizer_actions = {"a1", "a2"};
  g.learner_actions = {"b1", "b2"};
  g.optimizer_payoffs = {{0, 4}, {1, 2}};
  g.learner_payoffs = {{2, -1}, {-1, 1}};
  g.scale = 4.0;
  g.Validate();
  return g;
}

Game RandomGame(int num_optimizer_actions, int num_learner_actions,
                std::uint64_t seed, int lo, int hi) {
  RequireArg(num_optimizer_actions >= 1 && num_learner_actions >= 1,
             "RandomGame: action counts must be >= 1");
  RequireArg(lo <= hi && (lo != 0 || hi != 0), "RandomGame: bad payoff range");
  Game g;
  for (int a = 0; a < num_optimizer_actions; ++a)
    g.optimizer_actions.push_back("a" + std::to_string(a + 1));
  for (int b = 0; b < num_learner_actions; ++b)
    g.learner_actions.push_back("b" + std::to_string(b + 1));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(lo, hi);
  auto fill = [&](std::vector<std::vector<double>>& u) {
    u.assign(num_optimizer_actions,
             std::vector<double>(num_learner_actions, 0.0));
    for (auto& row : u)
      for (double& v : row) v = dist(rng);
  };
  fill(g.optimizer_payoffs);
  fill(g.learner_payoffs);
  g.scale = std::max(std::abs(lo), std::abs(hi));
  g.Validate();
  return g;
}

}  // namespace regretgame
