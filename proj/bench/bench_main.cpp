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

// Times the OpenMP policy search and match sweep against the serial
// reference paths and checks that both produce identical results.

#include <chrono>
#include <cmath>
#include <cstdio>

#include "regretgame/builtin_games.hpp"
#include "regretgame/control.hpp"
#include "regretgame/optimizers.hpp"
#include "regretgame/simulate.hpp"

using namespace regretgame;

namespace {

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

bool SameResult(const SearchResult& a, const SearchResult& b) {
  return a.value == b.value && a.kind == b.kind && a.lambda == b.lambda &&
         a.policy.steps.size() == b.policy.steps.size();
}

}  // namespace

int main() {
  std::printf("%-34s %10s %10s %8s %s\n", "benchmark", "serial[s]", "omp[s]",
              "speedup", "match");

  {
    Game game = BaitAndSwitchGame();
    SearchOptions serial;
    serial.max_steps = 3;
    serial.resolution = 16;
    serial.include_cycles = false;
    serial.threads = 1;
    SearchOptions parallel = serial;
    parallel.threads = 0;

    auto t0 = std::chrono::steady_clock::now();
    SearchResult rs = SearchPolicies(game, serial);
    double ts = Seconds(t0);
    t0 = std::chrono::steady_clock::now();
    SearchResult rp = SearchPolicies(game, parallel);
    double tp = Seconds(t0);
    std::printf("%-34s %10.3f %10.3f %7.2fx %s\n", "search bait 3x16",
                ts, tp, ts / tp, SameResult(rs, rp) ? "yes" : "NO");
  }

  {
    Game game = TwoActionCap();
    SearchOptions serial;
    serial.max_steps = 2;
    serial.resolution = 60;
    serial.include_cycles = true;
    serial.threads = 1;
    SearchOptions parallel = serial;
    parallel.threads = 0;

    auto t0 = std::chrono::steady_clock::now();
    SearchResult rs = SearchPolicies(game, serial);
    double ts = Seconds(t0);
    t0 = std::chrono::steady_clock::now();
    SearchResult rp = SearchPolicies(game, parallel);
    double tp = Seconds(t0);
    std::printf("%-34s %10.3f %10.3f %7.2fx %s\n",
                "search twocap 2x60 +cycles", ts, tp, ts / tp,
                SameResult(rs, rp) ? "yes" : "NO");
  }

  {
    Game game = BaitAndSwitchGame();
    std::vector<MatchConfig> configs;
    for (int s = 0; s < 8; ++s) {
      MatchConfig config;
      config.game = game;
      config.schedule = PolicyToSchedule(BaitAndSwitchPolicy(), 20000);
      config.learner =
          LearnerConfig(LearnerAlgorithm::kMultiplicativeWeights);
      config.num_rounds = 20000;
      config.mode = PlayMode::kSampled;
      config.seed = static_cast<std::uint64_t>(s + 1);
      config.id = "mw-s" + std::to_string(s + 1);
      configs.push_back(std::move(config));
    }

    auto t0 = std::chrono::steady_clock::now();
    std::vector<MatchResult> rs = Sweep(configs, 1);
    double ts = Seconds(t0);
    t0 = std::chrono::steady_clock::now();
    std::vector<MatchResult> rp = Sweep(configs, 0);
    double tp = Seconds(t0);
    bool same = rs.size() == rp.size();
    for (size_t i = 0; same && i < rs.size(); ++i) {
      same = rs[i].optimizer_total == rp[i].optimizer_total &&
             rs[i].regret == rp[i].regret &&
             rs[i].swap_regret == rp[i].swap_regret;
    }
    std::printf("%-34s %10.3f %10.3f %7.2fx %s\n", "sweep bait mw 8x20000",
                ts, tp, ts / tp, same ? "yes" : "NO");
  }
  return 0;
}
