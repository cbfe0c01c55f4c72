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

#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "regretgame/builtin_games.hpp"
#include "regretgame/optimizers.hpp"

namespace regretgame {
namespace {

Policy UniformTwoStep() {
  Policy p;
  p.steps.push_back({MixedStrategy::Uniform(2), 1.0});
  p.steps.push_back({MixedStrategy::Pure(2, 0), 1.0});
  return p;
}

}  // namespace

TEST_SUITE("policies") {

TEST_CASE("round allocation follows durations") {
  RoundSchedule s = PolicyToSchedule(UniformTwoStep(), 10);
  REQUIRE_EQ(s.runs.size(), 2);
  CHECK_EQ(s.runs[0].rounds, 5);
  CHECK_EQ(s.runs[1].rounds, 5);
  CHECK_EQ(s.runs[0].alpha.probs, std::vector<double>{0.5, 0.5});
  CHECK_EQ(s.runs[1].alpha.probs, std::vector<double>{1.0, 0.0});

  // Ten rounds over three equal thirds: the early steps soak up the
  // leftover after flooring.
  Policy thirds;
  for (int i = 0; i < 3; ++i)
    thirds.steps.push_back({MixedStrategy::Uniform(2), 1.0});
  s = PolicyToSchedule(thirds, 10);
  REQUIRE_EQ(s.runs.size(), 3);
  CHECK_EQ(s.runs[0].rounds, 4);
  CHECK_EQ(s.runs[1].rounds, 3);
  CHECK_EQ(s.runs[2].rounds, 3);
  CHECK_EQ(s.TotalRounds(), 10);

  // Only proportions matter.
  Policy scaled = thirds;
  for (auto& step : scaled.steps) step.duration *= 7.25;
  RoundSchedule t = PolicyToSchedule(scaled, 10);
  REQUIRE_EQ(t.runs.size(), s.runs.size());
  for (size_t i = 0; i < s.runs.size(); ++i)
    CHECK_EQ(t.runs[i].rounds, s.runs[i].rounds);

  // A zero-duration step vanishes from the schedule.
  Policy skewed;
  skewed.steps.push_back({MixedStrategy::Pure(2, 0), 0.0});
  skewed.steps.push_back({MixedStrategy::Pure(2, 1), 1.0});
  s = PolicyToSchedule(skewed, 10);
  REQUIRE_EQ(s.runs.size(), 1);
  CHECK_EQ(s.runs[0].rounds, 10);
  CHECK_EQ(s.runs[0].alpha.probs, std::vector<double>{0.0, 1.0});

  CHECK_THROWS_AS(PolicyToSchedule(thirds, 2), std::invalid_argument);
  CHECK_THROWS_AS(PolicyToSchedule(Policy{}, 5), std::invalid_argument);
}

TEST_CASE("round allocation preserves the total") {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    int k = 1 + static_cast<int>(rng() % 5);
    Policy policy;
    for (int i = 0; i < k; ++i)
      policy.steps.push_back({MixedStrategy::Uniform(3), unit(rng) + 0.01});
    std::int64_t rounds = k + static_cast<std::int64_t>(rng() % 50);
    RoundSchedule s = PolicyToSchedule(policy, rounds);
    CHECK_EQ(s.TotalRounds(), rounds);
    for (const auto& run : s.runs) CHECK_GE(run.rounds, 1);
  }
}

TEST_CASE("conservative schedule commits to one strategy") {
  Game game = BaitAndSwitchGame();
  RoundSchedule s = CommitmentSchedule(game, 0.1, 1000);
  REQUIRE_EQ(s.runs.size(), 1);
  CHECK_EQ(s.runs[0].rounds, 1000);
  CHECK_EQ(s.TotalRounds(), 1000);

  Commitment c = ConservativeCommitment(game, 0.1);
  CHECK_EQ(s.runs[0].alpha.probs, c.strategy.probs);

  CHECK_THROWS_AS(CommitmentSchedule(game, 0.1, 0), std::invalid_argument);

  // A game whose learner actions are payoff-identical has no strict best
  // response to secure, and the failure surfaces through the schedule.
  Game flat;
  flat.optimizer_actions = {"a", "b"};
  flat.learner_actions = {"x", "y"};
  flat.optimizer_payoffs = {{0, 1}, {1, 0}};
  flat.learner_payoffs = {{1, 1}, {0, 0}};
  flat.scale = 1;
  flat.Validate();
  CHECK_THROWS_AS(CommitmentSchedule(flat, 0.1, 100), DominatedResponseError);
}

TEST_CASE("two-phase bait plan") {
  Policy p = BaitAndSwitchPolicy();
  REQUIRE_EQ(p.steps.size(), 2);
  CHECK_EQ(p.steps[0].alpha.probs, std::vector<double>{1.0, 0.0});
  CHECK_EQ(p.steps[1].alpha.probs, std::vector<double>{0.0, 1.0});
  CHECK_EQ(p.steps[0].duration, 0.5);
  CHECK_EQ(p.TotalDuration(), 1.0);
  p.Validate(2);
  CHECK_THROWS_AS(p.Validate(3), std::invalid_argument);

  RoundSchedule s = PolicyToSchedule(p, 7);
  REQUIRE_EQ(s.runs.size(), 2);
  CHECK_EQ(s.runs[0].rounds, 4);
  CHECK_EQ(s.runs[1].rounds, 3);
}

TEST_CASE("policy validation") {
  Policy p;
  CHECK_THROWS_AS(p.Validate(2), std::invalid_argument);

  p.steps.push_back({MixedStrategy::Uniform(2), -1.0});
  CHECK_THROWS_AS(p.Validate(2), std::invalid_argument);

  p.steps[0].duration = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(p.Validate(2), std::invalid_argument);

  p.steps[0].duration = 0.0;  // valid alone, but the total must be positive
  CHECK_THROWS_AS(p.Validate(2), std::invalid_argument);

  p.steps[0].duration = 1.0;
  p.steps[0].alpha.probs = {0.7, 0.7};
  CHECK_THROWS_AS(p.Validate(2), std::invalid_argument);

  p.steps[0].alpha = MixedStrategy::Uniform(2);
  p.Validate(2);
}

}  // TEST_SUITE("policies")

}  // namespace regretgame
