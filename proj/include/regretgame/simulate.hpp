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

#ifndef REGRETGAME_SIMULATE_HPP_
#define REGRETGAME_SIMULATE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "regretgame/game.hpp"
#include "regretgame/learners.hpp"
#include "regretgame/optimizers.hpp"

namespace regretgame {

// kExpected advances the learner on full play distributions and accumulates
// exact expected payoffs; kSampled draws the committed row and the
// learner's arm each round, so rewards are realized matrix rows. Exp3 only
// sees the chosen arm's reward, so it requires kSampled.
enum class PlayMode { kExpected, kSampled };

struct MatchConfig {
  Game game;
  RoundSchedule schedule;
  LearnerConfig learner;
  std::int64_t num_rounds = 0;
  PlayMode mode = PlayMode::kExpected;
  std::uint64_t seed = 0;
  bool keep_trace = false;
  std::string id;

  void Validate() const;
};

struct MatchResult {
  std::string id;
  std::uint64_t seed = 0;
  std::int64_t num_rounds = 0;
  double optimizer_total = 0;
  double optimizer_average = 0;
  double learner_total = 0;
  // Realized total vs the best fixed arm. Realized means expected payoff of
  // the round's distribution in kExpected mode and the drawn arm's payoff
  // in kSampled mode.
  double regret = 0;
  // Always distribution-weighted (conditional expectation over the play
  // distributions), in both modes.
  double swap_regret = 0;
  std::vector<double> play_mass;  // per arm, summed play probability
  // Filled only when keep_trace is set. In kExpected mode the trace's
  // chosen column records the modal arm; the aggregates above never read it.
  RewardTrace trace;
  std::vector<std::vector<double>> play;
  std::string error;  // set by Sweep when a run throws

  bool ok() const { return error.empty(); }
};

// Plays one match to completion. Round order: the learner observes the
// commitment, plays, the arm is drawn (kSampled), then rewards are fed back.
MatchResult Run(const MatchConfig& config);

// Runs every config and returns results in input order. Exceptions are
// captured per run in MatchResult::error. threads: 1 = serial, 0 = all
// cores, otherwise the exact count.
std::vector<MatchResult> Sweep(const std::vector<MatchConfig>& configs,
                               int threads = 1);

}  // namespace regretgame

#endif  // REGRETGAME_SIMULATE_HPP_
