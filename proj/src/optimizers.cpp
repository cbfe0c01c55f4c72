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

#include "regretgame/optimizers.hpp"

#include <cmath>

namespace regretgame {

double Policy::TotalDuration() const {
  double s = 0;
  for (const auto& step : steps) s += step.duration;
  return s;
}

void Policy::Validate(int num_optimizer_actions) const {
  RequireArg(!steps.empty(), "Policy: no steps");
  for (const auto& step : steps) {
    RequireArg(std::isfinite(step.duration) && step.duration >= 0,
               "Policy: durations must be finite and >= 0");
    RequireArg(step.alpha.size() == num_optimizer_actions,
               "Policy: alpha size mismatch");
    step.alpha.Validate();
  }
  RequireArg(TotalDuration() > 0, "Policy: total duration must be > 0");
}

std::int64_t RoundSchedule::TotalRounds() const {
  std::int64_t s = 0;
  for (const auto& run : runs) s += run.rounds;
  return s;
}

RoundSchedule PolicyToSchedule(const Policy& policy, std::int64_t num_rounds) {
  RequireArg(!policy.steps.empty(), "PolicyToSchedule: empty policy");
  const int k = static_cast<int>(policy.steps.size());
  RequireArg(num_rounds >= k,
             "PolicyToSchedule: fewer rounds than policy steps");
  const double total = policy.TotalDuration();
  RequireArg(total > 0, "PolicyToSchedule: total duration must be > 0");

  std::vector<std::int64_t> rounds(k);
  std::int64_t assigned = 0;
  for (int i = 0; i < k; ++i) {
    rounds[i] = static_cast<std::int64_t>(
        std::floor(policy.steps[i].duration / total * num_rounds));
    assigned += rounds[i];
  }
  std::int64_t left = num_rounds - assigned;
  for (int i = 0; left > 0; i = (i + 1) % k) {
    ++rounds[i];
    --left;
  }

  RoundSchedule out;
  for (int i = 0; i < k; ++i) {
    if (rounds[i] > 0) out.runs.push_back({policy.steps[i].alpha, rounds[i]});
  }
  return out;
}

RoundSchedule CommitmentSchedule(const Game& game, double delta,
                                 std::int64_t num_rounds) {
  RequireArg(num_rounds >= 1, "CommitmentSchedule: needs at least one round");
  Commitment c = ConservativeCommitment(game, delta);
  RoundSchedule out;
  out.runs.push_back({c.strategy, num_rounds});
  return out;
}

Policy BaitAndSwitchPolicy() {
  Policy p;
  p.steps.push_back({MixedStrategy::Pure(2, 0), 0.5});
  p.steps.push_back({MixedStrategy::Pure(2, 1), 0.5});
  return p;
}

}  // namespace regretgame
