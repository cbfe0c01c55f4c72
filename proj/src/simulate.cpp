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

#include "regretgame/simulate.hpp"

#include <algorithm>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace regretgame {
namespace {

int SampleIndex(const std::vector<double>& p, std::mt19937_64& rng) {
  double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  double acc = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(p.size()) - 1;
}

int ModalArm(const std::vector<double>& p) {
  return static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin());
}

}  // namespace

void MatchConfig::Validate() const {
  game.Validate();
  learner.Validate();
  RequireArg(num_rounds >= 1, "MatchConfig: num_rounds must be >= 1");
  RequireArg(schedule.TotalRounds() == num_rounds,
             "MatchConfig: schedule length does not match num_rounds");
  for (const auto& run : schedule.runs) {
    RequireArg(run.alpha.size() == game.num_optimizer_actions(),
               "MatchConfig: schedule strategy size mismatch");
    run.alpha.Validate();
    RequireArg(run.rounds >= 1,
               "MatchConfig: schedule runs must cover at least one round");
  }
  RequireArg(!(mode == PlayMode::kExpected &&
               learner.algorithm == LearnerAlgorithm::kExp3),
             "MatchConfig: Exp3 needs sampled play; expected play would "
             "reveal the full reward vector");
}

MatchResult Run(const MatchConfig& config) {
  config.Validate();
  const Game& game = config.game;
  const int n = game.num_learner_actions();
  const bool sampled = config.mode == PlayMode::kSampled;

  std::unique_ptr<Learner> learner = MakeLearner(
      config.learner, n, config.num_rounds, game.scale, &game);
  std::mt19937_64 rng(config.seed ^
                      (config.learner.seed * 0x9e3779b97f4a7c15ULL));

  MatchResult result;
  result.id = config.id;
  result.seed = config.seed;
  result.num_rounds = config.num_rounds;
  result.play_mass.assign(n, 0.0);
  if (config.keep_trace) {
    result.trace = RewardTrace(n);
    result.trace.rewards.reserve(config.num_rounds);
    result.play.reserve(config.num_rounds);
  }

  std::vector<double> sigma(n, 0.0);
  std::vector<std::vector<double>> swap_sums(n, std::vector<double>(n, 0.0));
  double realized = 0;
  std::vector<double> rewards(n), opt_payoff(n);

  for (const auto& block : config.schedule.runs) {
    if (!sampled) {
      for (int j = 0; j < n; ++j) {
        rewards[j] = UtilityVsPure(game, block.alpha, j, Player::kLearner);
        opt_payoff[j] =
            UtilityVsPure(game, block.alpha, j, Player::kOptimizer);
      }
    }
    for (std::int64_t i = 0; i < block.rounds; ++i) {
      learner->ObserveOptimizer(block.alpha);
      const std::vector<double>& p = learner->Play();

      int chosen;
      double gain, opt_gain;
      if (sampled) {
        // The committed row is drawn first; the learner's reward vector is
        // the realized row of the payoff matrix, not its expectation.
        int row = SampleIndex(block.alpha.probs, rng);
        for (int j = 0; j < n; ++j) rewards[j] = game.u_lrn(row, j);
        chosen = SampleIndex(p, rng);
        gain = rewards[chosen];
        opt_gain = game.u_opt(row, chosen);
      } else {
        chosen = ModalArm(p);
        gain = Dot(p, rewards);
        opt_gain = Dot(p, opt_payoff);
      }
      result.learner_total += gain;
      result.optimizer_total += opt_gain;
      realized += gain;
      for (int a = 0; a < n; ++a) {
        sigma[a] += rewards[a];
        result.play_mass[a] += p[a];
        if (p[a] > 0) {
          for (int j = 0; j < n; ++j) swap_sums[a][j] += p[a] * rewards[j];
        }
      }
      if (config.keep_trace) {
        result.play.push_back(p);
        result.trace.Append(rewards, chosen);
      }
      learner->Update(rewards, chosen);
    }
  }

  result.optimizer_average =
      result.optimizer_total / static_cast<double>(config.num_rounds);
  result.regret = *std::max_element(sigma.begin(), sigma.end()) - realized;
  for (int a = 0; a < n; ++a) {
    double best = swap_sums[a][a];
    for (int j = 0; j < n; ++j) best = std::max(best, swap_sums[a][j]);
    result.swap_regret += best - swap_sums[a][a];
  }
  return result;
}

std::vector<MatchResult> Sweep(const std::vector<MatchConfig>& configs,
                               int threads) {
  std::vector<MatchResult> results(configs.size());
  auto run_one = [&](size_t i) {
    try {
      results[i] = Run(configs[i]);
    } catch (const std::exception& e) {
      results[i] = MatchResult();
      results[i].id = configs[i].id;
      results[i].seed = configs[i].seed;
      results[i].num_rounds = configs[i].num_rounds;
      results[i].error = e.what();
    }
  };

#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#else
  threads = 1;
#endif
  if (threads == 1) {
    for (size_t i = 0; i < configs.size(); ++i) run_one(i);
  } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (size_t i = 0; i < configs.size(); ++i) run_one(i);
#endif
  }
  return results;
}

}  // namespace regretgame
