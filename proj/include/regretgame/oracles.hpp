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

#ifndef REGRETGAME_ORACLES_HPP_
#define REGRETGAME_ORACLES_HPP_

#include <utility>
#include <vector>

#include "regretgame/game.hpp"

namespace regretgame {

// Cross-checks built from first principles, deliberately avoiding the code
// paths they are used to verify (no LP solver except where noted).

struct GridStackelbergResult {
  double value = 0;
  std::vector<double> alpha;
  int response = -1;
};

// Commitment value by exhaustive simplex-grid enumeration with an
// optimistically tie-breaking learner. Approximation error is O(1/resolution).
GridStackelbergResult GridStackelberg(const Game& game, int resolution);

// Best average payoff over policies of at most two constant-commitment
// steps, on a simplex grid of commitments. Feasible duration splits form an
// interval whose endpoints are computed in closed form, so within the grid
// the two-step optimum is exact. include_cycles additionally scores scaling
// loops; loops with scale factor exactly 1 are only scanned for games with
// at most three learner actions.
double TwoStepGridValue(const Game& game, int resolution, bool include_cycles,
                        const std::vector<double>& lambdas);

// All pure-strategy equilibria (optimizer action, learner action).
std::vector<std::pair<int, int>> PureNashEquilibria(const Game& game);

// The optimizer's security value max_alpha min_b u_opt(alpha, b). Solved as
// a one-shot linear program.
double MinimaxValue(const Game& game);

}  // namespace regretgame

#endif  // REGRETGAME_ORACLES_HPP_
