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

#ifndef REGRETGAME_LEARNERS_HPP_
#define REGRETGAME_LEARNERS_HPP_

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "regretgame/game.hpp"

namespace regretgame {

// Reward history of an online run: per-round full reward vectors, the arm
// actually chosen, and cumulative per-arm totals.
struct RewardTrace {
  int num_arms = 0;
  std::vector<std::vector<double>> rewards;
  std::vector<int> chosen;
  std::vector<std::vector<double>> cumulative;

  RewardTrace() = default;
  explicit RewardTrace(int k) : num_arms(k) {}

  int num_rounds() const { return static_cast<int>(chosen.size()); }
  void Append(const std::vector<double>& reward, int chosen_arm);
  void Validate() const;
};

enum class LearnerAlgorithm {
  kMultiplicativeWeights,
  kFollowThePerturbedLeader,
  kFollowTheLeader,
  kExp3,
  // No-swap-regret reduction: one inner no-regret learner per arm, combined
  // through the stationary distribution of their advice matrix.
  kSwapWrapper,
  // Worst-case mean-based opponent: plays the optimizer-worst arm among
  // those within slack of the cumulative leader. Needs white-box access to
  // the optimizer's per-round commitment.
  kAdversarialMeanBased,
};

enum class FeedbackMode { kExperts, kBandit };

// A rate/perturbation/gamma of 0 selects the default schedule:
// rate sqrt(ln K / T) for multiplicative weights, sqrt(ln K / (T K)) for
// Exp3, perturbation width sqrt(T), slack gamma = 1 / sqrt(T).
struct LearnerConfig {
  LearnerAlgorithm algorithm = LearnerAlgorithm::kMultiplicativeWeights;
  LearnerAlgorithm inner = LearnerAlgorithm::kMultiplicativeWeights;
  double rate = 0;
  double perturbation = 0;
  double gamma = 0;
  FeedbackMode feedback = FeedbackMode::kExperts;
  std::uint64_t seed = 0;

  LearnerConfig() = default;
  explicit LearnerConfig(LearnerAlgorithm a) : algorithm(a) {
    if (a == LearnerAlgorithm::kExp3) feedback = FeedbackMode::kBandit;
  }

  void Validate() const;
  std::string Name() const;  // short token: "mw", "ftpl", "swap-mw", ...
};

// Online learner over a fixed arm set. Per round: Play() returns the play
// distribution (reference valid until the next call), then Update() feeds
// the round's rewards. Experts learners read the whole vector; bandit
// learners only rewards[chosen_arm]. kAdversarialMeanBased additionally
// requires ObserveOptimizer() before every Play().
class Learner {
 public:
  explicit Learner(int num_arms) : num_arms_(num_arms), dist_(num_arms, 0.0) {
    RequireArg(num_arms >= 1, "Learner: needs at least one arm");
  }
  virtual ~Learner() = default;

  int num_arms() const { return num_arms_; }
  virtual const std::vector<double>& Play() = 0;
  virtual void Update(const std::vector<double>& rewards, int chosen_arm) = 0;
  virtual void ObserveOptimizer(const MixedStrategy& /*alpha*/) {}

 protected:
  int num_arms_;
  std::vector<double> dist_;
};

// game is only needed by kAdversarialMeanBased (its arms must be the game's
// learner actions); reward_scale bounds |reward| and is used by Exp3 to
// renormalize rewards to [0, 1].
std::unique_ptr<Learner> MakeLearner(const LearnerConfig& config, int num_arms,
                                     std::int64_t horizon, double reward_scale,
                                     const Game* game = nullptr);

// Per-round closed forms, exposed for direct testing.

// Softmax of eta * sigma, computed stably.
std::vector<double> MwDistribution(const std::vector<double>& sigma,
                                   double eta);

// Exact distribution of argmax_i (sigma_i + z_i) with z iid Uniform[0,
// width]: piecewise-polynomial integration, exact up to rounding.
std::vector<double> FtplDistribution(const std::vector<double>& sigma,
                                     double width);

// Uniform over the arms within slack of the cumulative leader.
std::vector<double> FtlDistribution(const std::vector<double>& sigma,
                                    double slack);

class StationarySolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Stationary row vector p = pQ of a row-stochastic matrix via a min-norm
// least-squares solve; ties (e.g. Q = I) resolve to uniform. Falls back to
// damped power iteration for large or ill-conditioned inputs and throws
// StationarySolveError if ||pQ - p||_1 cannot be brought under 1e-9.
std::vector<double> StationaryDistribution(
    const std::vector<std::vector<double>>& q);

// max over fixed arms of (that arm's total reward) minus the realized total.
double Regret(const RewardTrace& trace);

// The rounds of `trace` on which source_arm was chosen, as their own trace.
RewardTrace SubTrace(const RewardTrace& trace, int source_arm);

struct SwapRegretReport {
  double value = 0;
  std::vector<int> best_map;  // best per-source-arm replacement
};

// Best gain from rerouting each arm's rounds to a single replacement arm,
// summed over source arms. Equals the sum over arms of Regret(SubTrace(.)).
SwapRegretReport SwapRegret(const RewardTrace& trace);

struct MeanBasedViolation {
  int round = 0;
  int arm = 0;
  double prob = 0;     // probability assigned to the trailing arm
  double deficit = 0;  // how far past the slack the arm was trailing
};

// Flags rounds where an arm whose cumulative reward through round t-1
// trails the leader by more than gamma * T is still played with probability
// above gamma. play[t] is the distribution used when choosing at round t.
std::vector<MeanBasedViolation> MeanBasedAudit(
    const RewardTrace& trace, const std::vector<std::vector<double>>& play,
    double gamma);

}  // namespace regretgame

#endif  // REGRETGAME_LEARNERS_HPP_
