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

#ifndef REGRETGAME_BUILTIN_GAMES_HPP_
#define REGRETGAME_BUILTIN_GAMES_HPP_

#include <cstdint>

#include "regretgame/game.hpp"

namespace regretgame {

// 2x3 game (Top/Bottom vs Left/Mid/Right) with static Stackelberg value 0.
// The eps > 0 on (Top, Left) baits mean-based learners into Left during a
// Top phase; when the schedule switches to Bottom, Left's cumulative payoff
// decays, the learner drifts to Right, and the optimizer collects
// u_opt(Bottom, Right) = 2 for most of the second half. eps in [0, 1);
// eps = 0 is the control-problem limit game.
Game BaitAndSwitchGame(double eps = 0.05);

// Zero-sum matching pennies; the optimizer wins on a match.
Game MatchingPennies();

// 2x2 game whose best dynamic schedule ties the Stackelberg value (2.8):
// no schedule against a mean-based learner can beat the static optimum here.
Game TwoActionCap();

// Seeded generator: integer payoffs for both players drawn uniformly from
// [lo, hi], scale = max(|lo|, |hi|). Deterministic for a given seed.
Game RandomGame(int num_optimizer_actions, int num_learner_actions,
                std::uint64_t seed, int lo = -2, int hi = 2);

}  // namespace regretgame

#endif  // REGRETGAME_BUILTIN_GAMES_HPP_
