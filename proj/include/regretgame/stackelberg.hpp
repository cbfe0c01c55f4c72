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

#ifndef REGRETGAME_STACKELBERG_HPP_
#define REGRETGAME_STACKELBERG_HPP_

#include <stdexcept>
#include <vector>

#include "regretgame/game.hpp"

namespace regretgame {

struct StackelbergSolution {
  MixedStrategy commitment;
  int response = 0;  // learner action the value is realized against
  double value = 0;
  // Optimal optimizer payoff when the learner is steered to each action;
  // -inf where no commitment makes that action a best response.
  std::vector<double> column_values;
};

// Optimal commitment under optimistic (optimizer-favoring) learner
// tie-breaking, via one LP per learner column. When several columns attain
// the optimum within kProbTol, the highest-index one is reported.
StackelbergSolution Stackelberg(const Game& game);

struct DominanceResult {
  bool dominated = false;
  // A mixture over the other learner actions that weakly dominates the
  // queried one (entry at the queried action is 0). Empty if not dominated.
  MixedStrategy mixture;
};

// Is the learner action weakly dominated by a mixture of the others?
// Requires at least two learner actions.
DominanceResult IsWeaklyDominated(const Game& game, int learner_action);

class DominatedResponseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Commitment {
  MixedStrategy strategy;
  int target_response = 0;
  // The target strictly beats every rival learner action by at least this.
  double margin = 0;
  double delta = 0;
};

// Stackelberg commitment mixed toward the interior: alpha* =
// (1 - delta) * alpha + delta * alpha', where alpha' maximizes the target
// response's worst-case advantage kappa over rival actions. The result makes
// the target the unique best response with margin >= delta * kappa, at an
// optimizer cost of at most delta * 2 * scale per round. Throws
// DominatedResponseError when no strictly separating alpha' exists (the
// target response is weakly dominated). delta must lie in (0, 1).
Commitment ConservativeCommitment(const Game& game, double delta);

}  // namespace regretgame

#endif  // REGRETGAME_STACKELBERG_HPP_
