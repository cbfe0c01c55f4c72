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

#ifndef REGRETGAME_OPTIMIZERS_HPP_
#define REGRETGAME_OPTIMIZERS_HPP_

#include <cstdint>
#include <vector>

#include "regretgame/game.hpp"
#include "regretgame/stackelberg.hpp"

namespace regretgame {

// A continuous-time commitment plan: play alpha for a stretch of duration t.
// Durations are arbitrary nonnegative weights; only their proportions
// matter (the plan can be rescaled freely).
struct PolicyStep {
  MixedStrategy alpha;
  double duration = 0;
};

struct Policy {
  std::vector<PolicyStep> steps;

  double TotalDuration() const;
  // Durations finite and >= 0 with positive total; alphas valid and sized
  // for num_optimizer_actions.
  void Validate(int num_optimizer_actions) const;
};

// A per-round commitment plan, stored as runs of constant strategy.
struct ScheduleRun {
  MixedStrategy alpha;
  std::int64_t rounds = 0;
};

struct RoundSchedule {
  std::vector<ScheduleRun> runs;
  std::int64_t TotalRounds() const;
};

// Rounds proportional to each step's share of the total duration: floor the
// shares, then hand the remaining rounds one each to the earliest steps.
// Throws if num_rounds < the number of steps.
RoundSchedule PolicyToSchedule(const Policy& policy, std::int64_t num_rounds);

// The conservative commitment played every round.
RoundSchedule CommitmentSchedule(const Game& game, double delta,
                                 std::int64_t num_rounds);

// Two-phase plan for BaitAndSwitchGame: pure Top for the first half, pure
// Bottom for the second. Against mean-based learners this earns close to
// the game's best payoff per round, far above its Stackelberg value of 0.
Policy BaitAndSwitchPolicy();

}  // namespace regretgame

#endif  // REGRETGAME_OPTIMIZERS_HPP_
