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

#ifndef REGRETGAME_GAME_HPP_
#define REGRETGAME_GAME_HPP_

#include <string>
#include <vector>

#include "regretgame/common.hpp"

namespace regretgame {

enum class Player { kOptimizer, kLearner };

// A probability distribution over a finite action set: nonnegative entries
// summing to 1 within kProbTol.
struct MixedStrategy {
  std::vector<double> probs;

  MixedStrategy() = default;
  explicit MixedStrategy(std::vector<double> p) : probs(std::move(p)) {}

  int size() const { return static_cast<int>(probs.size()); }
  double operator[](int i) const { return probs[i]; }

  // Throws std::invalid_argument if entries are negative or do not sum to 1.
  void Validate() const;

  static MixedStrategy Uniform(int n);
  static MixedStrategy Pure(int n, int index);
};

// A finite bimatrix game between an optimizer (row player, commits to mixed
// strategies) and a learner (column player). Payoffs are bounded: every
// entry of both matrices must satisfy |u| <= scale.
struct Game {
  std::vector<std::string> optimizer_actions;
  std::vector<std::string> learner_actions;
  std::vector<std::vector<double>> optimizer_payoffs;  // M x N
  std::vector<std::vector<double>> learner_payoffs;    // M x N
  double scale = 1.0;

  int num_optimizer_actions() const {
    return static_cast<int>(optimizer_actions.size());
  }
  int num_learner_actions() const {
    return static_cast<int>(learner_actions.size());
  }
  double u_opt(int a, int b) const { return optimizer_payoffs[a][b]; }
  double u_lrn(int a, int b) const { return learner_payoffs[a][b]; }

  // Index of a learner action by name, -1 if absent.
  int LearnerActionIndex(const std::string& name) const;

  // Throws std::invalid_argument on malformed games (wrong matrix shapes,
  // entries exceeding scale, duplicate or empty action names).
  void Validate() const;
};

// Expected payoff for `player` when the optimizer plays alpha against the
// learner's beta.
double Utility(const Game& game, const MixedStrategy& alpha,
               const MixedStrategy& beta, Player player);

// Expected payoff when the learner plays the pure action b.
double UtilityVsPure(const Game& game, const MixedStrategy& alpha, int b,
                     Player player);

// Learner actions maximizing the learner's payoff against alpha, including
// ties within tol. Never empty.
std::vector<int> BestResponses(const Game& game, const MixedStrategy& alpha,
                               double tol = kProbTol);

}  // namespace regretgame

#endif  // REGRETGAME_GAME_HPP_
