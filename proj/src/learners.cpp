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

#include "regretgame/learners.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace regretgame {

void RewardTrace::Append(const std::vector<double>& reward, int chosen_arm) {
  RequireArg(static_cast<int>(reward.size()) == num_arms,
             "RewardTrace::Append: reward width mismatch");
  RequireArg(chosen_arm >= 0 && chosen_arm < num_arms,
             "RewardTrace::Append: chosen arm out of range");
  rewards.push_back(reward);
  chosen.push_back(chosen_arm);
  std::vector<double> cum =
      cumulative.empty() ? std::vector<double>(num_arms, 0.0)
                         : cumulative.back();
  for (int j = 0; j < num_arms; ++j) cum[j] += reward[j];
  cumulative.push_back(std::move(cum));
}

void RewardTrace::Validate() const {
  RequireArg(num_arms >= 1, "RewardTrace: needs at least one arm");
  RequireArg(rewards.size() == chosen.size() &&
                 cumulative.size() == chosen.size(),
             "RewardTrace: column lengths differ");
  std::vector<double> cum(num_arms, 0.0);
  for (size_t t = 0; t < rewards.size(); ++t) {
    RequireArg(static_cast<int>(rewards[t].size()) == num_arms &&
                   static_cast<int>(cumulative[t].size()) == num_arms,
               "RewardTrace: row width mismatch");
    RequireArg(chosen[t] >= 0 && chosen[t] < num_arms,
               "RewardTrace: chosen arm out of range");
    for (int j = 0; j < num_arms; ++j) {
      cum[j] += rewards[t][j];
      RequireArg(std::fabs(cum[j] - cumulative[t][j]) <= 1e-6,
                 "RewardTrace: cumulative column inconsistent");
    }
  }
}

void LearnerConfig::Validate() const {
  RequireArg(rate >= 0 && perturbation >= 0 && gamma >= 0,
             "LearnerConfig: rate, perturbation and gamma must be >= 0");
  const bool bandit = feedback == FeedbackMode::kBandit;
  if (algorithm == LearnerAlgorithm::kExp3) {
    RequireArg(bandit, "LearnerConfig: Exp3 runs on bandit feedback");
  } else {
    RequireArg(!bandit,
               "LearnerConfig: only Exp3 runs on bandit feedback");
  }
  if (algorithm == LearnerAlgorithm::kSwapWrapper) {
    RequireArg(inner == LearnerAlgorithm::kMultiplicativeWeights ||
                   inner == LearnerAlgorithm::kFollowThePerturbedLeader,
               "LearnerConfig: swap wrapper inner learner must be "
               "multiplicative weights or perturbed leader");
  }
}

std::string LearnerConfig::Name() const {
  switch (algorithm) {
    case LearnerAlgorithm::kMultiplicativeWeights:
      return "mw";
    case LearnerAlgorithm::kFollowThePerturbedLeader:
      return "ftpl";
    case LearnerAlgorithm::kFollowTheLeader:
      return "ftl";
    case LearnerAlgorithm::kExp3:
      return "exp3";
    case LearnerAlgorithm::kSwapWrapper:
      return inner == LearnerAlgorithm::kMultiplicativeWeights ? "swap-mw"
                                                               : "swap-ftpl";
    case LearnerAlgorithm::kAdversarialMeanBased:
      return "adversarial";
  }
  return "unknown";
}

std::vector<double> MwDistribution(const std::vector<double>& sigma,
                                   double eta) {
  RequireArg(!sigma.empty(), "MwDistribution: empty sigma");
  RequireArg(eta >= 0, "MwDistribution: eta must be >= 0");
  double m = *std::max_element(sigma.begin(), sigma.end());
  std::vector<double> p(sigma.size());
  double s = 0;
  for (size_t i = 0; i < sigma.size(); ++i) {
    p[i] = std::exp(eta * (sigma[i] - m));
    s += p[i];
  }
  for (double& v : p) v /= s;
  return p;
}

std::vector<double> FtplDistribution(const std::vector<double>& sigma,
                                     double width) {
  const int k = static_cast<int>(sigma.size());
  RequireArg(k >= 1, "FtplDistribution: empty sigma");
  RequireArg(width > 0, "FtplDistribution: width must be > 0");
  if (k == 1) return {1.0};

  std::vector<double> p(k, 0.0);
  std::vector<double> breaks, poly, next;
  for (int i = 0; i < k; ++i) {
    // p_i = (1/width) * integral over z in [0, width] of
    //       prod_{j != i} clamp((sigma_i - sigma_j + z) / width, 0, 1).
    // Between breakpoints every factor is constant-0, constant-1 or affine,
    // so the integrand is a polynomial; integrate it exactly.
    breaks.assign({0.0, width});
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      double lo = sigma[j] - sigma[i];          // below: factor is 0
      double hi = sigma[j] - sigma[i] + width;  // above: factor is 1
      if (lo > 0 && lo < width) breaks.push_back(lo);
      if (hi > 0 && hi < width) breaks.push_back(hi);
    }
    std::sort(breaks.begin(), breaks.end());
    double total = 0;
    for (size_t seg = 0; seg + 1 < breaks.size(); ++seg) {
      double a = breaks[seg], b = breaks[seg + 1];
      if (b - a <= width * 1e-15) continue;
      double mid = 0.5 * (a + b);
      // Polynomial in y = z - a, built up one affine factor at a time.
      poly.assign({1.0});
      bool zero = false;
      for (int j = 0; j < k && !zero; ++j) {
        if (j == i) continue;
        double v = sigma[i] - sigma[j] + mid;
        if (v <= 0) {
          zero = true;
        } else if (v < width) {
          double c0 = (sigma[i] - sigma[j] + a) / width, c1 = 1.0 / width;
          next.assign(poly.size() + 1, 0.0);
          for (size_t d = 0; d < poly.size(); ++d) {
            next[d] += poly[d] * c0;
            next[d + 1] += poly[d] * c1;
          }
          poly.swap(next);
        }  // v >= width: saturated factor of 1
      }
      if (zero) continue;
      double len = b - a, pw = len;
      for (size_t d = 0; d < poly.size(); ++d) {
        total += poly[d] * pw / (d + 1);
        pw *= len;
      }
    }
    p[i] = total / width;
  }
  double s = Sum(p);
  Require(std::fabs(s - 1.0) <= 1e-9,
          "FtplDistribution: mass integrated to " + std::to_string(s));
  for (double& v : p) v /= s;
  return p;
}

std::vector<double> FtlDistribution(const std::vector<double>& sigma,
                                    double slack) {
  RequireArg(!sigma.empty(), "FtlDistribution: empty sigma");
  RequireArg(slack >= 0, "FtlDistribution: slack must be >= 0");
  double m = *std::max_element(sigma.begin(), sigma.end());
  std::vector<int> in;
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] >= m - slack - 1e-12) in.push_back(static_cast<int>(i));
  }
  std::vector<double> p(sigma.size(), 0.0);
  for (int i : in) p[i] = 1.0 / in.size();
  return p;
}

namespace {

// Dense Cholesky solve of an SPD system, sized for K <= 64.
std::vector<double> SolveSpd(std::vector<std::vector<double>> m,
                             std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = m[i][j];
      for (int t = 0; t < j; ++t) s -= m[i][t] * m[j][t];
      if (i == j) {
        Require(s > 0, "SolveSpd: matrix not positive definite");
        m[i][i] = std::sqrt(s);
      } else {
        m[i][j] = s / m[j][j];
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    double s = b[i];
    for (int t = 0; t < i; ++t) s -= m[i][t] * b[t];
    b[i] = s / m[i][i];
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int t = i + 1; t < n; ++t) s -= m[t][i] * b[t];
    b[i] = s / m[i][i];
  }
  return b;
}

double StationaryResidual(const std::vector<std::vector<double>>& q,
                          const std::vector<double>& p) {
  const int k = static_cast<int>(p.size());
  double res = 0;
  for (int j = 0; j < k; ++j) {
    double v = -p[j];
    for (int i = 0; i < k; ++i) v += p[i] * q[i][j];
    res += std::fabs(v);
  }
  return res;
}

std::vector<double> PowerIterate(const std::vector<std::vector<double>>& q) {
  const int k = static_cast<int>(q.size());
  std::vector<double> p(k, 1.0 / k), nx(k);
  for (int it = 0; it < 200000; ++it) {
    // Lazy step keeps periodic chains from oscillating.
    for (int j = 0; j < k; ++j) {
      double v = 0;
      for (int i = 0; i < k; ++i) v += p[i] * q[i][j];
      nx[j] = 0.5 * p[j] + 0.5 * v;
    }
    double diff = 0, s = 0;
    for (int j = 0; j < k; ++j) s += nx[j];
    for (int j = 0; j < k; ++j) {
      nx[j] /= s;
      diff += std::fabs(nx[j] - p[j]);
    }
    p.swap(nx);
    if (diff <= 1e-14) break;
  }
  return p;
}

}  // namespace

std::vector<double> StationaryDistribution(
    const std::vector<std::vector<double>>& q) {
  const int k = static_cast<int>(q.size());
  RequireArg(k >= 1, "StationaryDistribution: empty matrix");
  for (const auto& row : q) {
    RequireArg(static_cast<int>(row.size()) == k,
               "StationaryDistribution: matrix not square");
    double s = 0;
    for (double v : row) {
      RequireArg(v >= -1e-12, "StationaryDistribution: negative entry");
      s += v;
    }
    RequireArg(std::fabs(s - 1.0) <= 1e-9,
               "StationaryDistribution: rows must sum to 1");
  }

  std::vector<double> p;
  if (k <= 64) {
    // Least squares on [Q^T - I; 1^T] p = [0; 1] with a tiny ridge, which
    // selects the minimum-norm (uniform-leaning) solution under ties.
    std::vector<std::vector<double>> m(k, std::vector<double>(k, 0.0));
    for (int a = 0; a < k; ++a) {
      for (int c = 0; c < k; ++c) {
        double s = 1.0;  // ones row contributes 1 to every entry
        for (int r = 0; r < k; ++r) {
          double ba = q[a][r] - (r == a ? 1.0 : 0.0);
          double bc = q[c][r] - (r == c ? 1.0 : 0.0);
          s += ba * bc;
        }
        m[a][c] = s + (a == c ? 1e-12 : 0.0);
      }
    }
    p = SolveSpd(std::move(m), std::vector<double>(k, 1.0));
    double s = 0;
    for (double& v : p) {
      if (v < 0) v = 0;
      s += v;
    }
    if (s > 0) {
      for (double& v : p) v /= s;
    }
    if (s <= 0 || StationaryResidual(q, p) > 1e-9) p = PowerIterate(q);
  } else {
    p = PowerIterate(q);
  }
  double res = StationaryResidual(q, p);
  if (res > 1e-9) {
    throw StationarySolveError(
        "StationaryDistribution: ||pQ - p||_1 = " + std::to_string(res) +
        " for a " + std::to_string(k) + "-state chain");
  }
  return p;
}

double Regret(const RewardTrace& trace) {
  if (trace.num_rounds() == 0) return 0;
  double realized = 0;
  for (int t = 0; t < trace.num_rounds(); ++t)
    realized += trace.rewards[t][trace.chosen[t]];
  const auto& totals = trace.cumulative.back();
  return *std::max_element(totals.begin(), totals.end()) - realized;
}

RewardTrace SubTrace(const RewardTrace& trace, int source_arm) {
  RequireArg(source_arm >= 0 && source_arm < trace.num_arms,
             "SubTrace: arm out of range");
  RewardTrace out(trace.num_arms);
  for (int t = 0; t < trace.num_rounds(); ++t) {
    if (trace.chosen[t] == source_arm)
      out.Append(trace.rewards[t], source_arm);
  }
  return out;
}

SwapRegretReport SwapRegret(const RewardTrace& trace) {
  const int k = trace.num_arms;
  SwapRegretReport report;
  report.best_map.resize(k);
  for (int a = 0; a < k; ++a) report.best_map[a] = a;
  if (trace.num_rounds() == 0) return report;

  // sums[a][j]: total reward arm j would have earned on the rounds where a
  // was chosen. Accumulated in round order so the per-arm decomposition
  // matches Regret(SubTrace(...)) bit for bit.
  std::vector<std::vector<double>> sums(k, std::vector<double>(k, 0.0));
  for (int t = 0; t < trace.num_rounds(); ++t) {
    auto& row = sums[trace.chosen[t]];
    for (int j = 0; j < k; ++j) row[j] += trace.rewards[t][j];
  }
  for (int a = 0; a < k; ++a) {
    int best = a;
    for (int j = 0; j < k; ++j) {
      if (sums[a][j] > sums[a][best]) best = j;
    }
    report.best_map[a] = best;
    report.value += sums[a][best] - sums[a][a];
  }
  return report;
}

std::vector<MeanBasedViolation> MeanBasedAudit(
    const RewardTrace& trace, const std::vector<std::vector<double>>& play,
    double gamma) {
  RequireArg(gamma >= 0, "MeanBasedAudit: gamma must be >= 0");
  RequireArg(static_cast<int>(play.size()) == trace.num_rounds(),
             "MeanBasedAudit: one play distribution per round required");
  const int k = trace.num_arms;
  const double slack = gamma * trace.num_rounds();
  std::vector<MeanBasedViolation> out;
  std::vector<double> sigma(k, 0.0);  // rewards through round t-1
  for (int t = 0; t < trace.num_rounds(); ++t) {
    RequireArg(static_cast<int>(play[t].size()) == k,
               "MeanBasedAudit: play row width mismatch");
    double lead = *std::max_element(sigma.begin(), sigma.end());
    for (int j = 0; j < k; ++j) {
      double deficit = lead - sigma[j] - slack;
      if (deficit > 1e-12 && play[t][j] > gamma + 1e-12) {
        out.push_back({t, j, play[t][j], deficit});
      }
    }
    for (int j = 0; j < k; ++j) sigma[j] += trace.rewards[t][j];
  }
  return out;
}

namespace {

class MwLearner : public Learner {
 public:
  MwLearner(int k, double eta) : Learner(k), eta_(eta), sigma_(k, 0.0) {}
  const std::vector<double>& Play() override {
    dist_ = MwDistribution(sigma_, eta_);
    return dist_;
  }
  void Update(const std::vector<double>& rewards, int) override {
    RequireArg(static_cast<int>(rewards.size()) == num_arms_,
               "MwLearner: reward width mismatch");
    for (int j = 0; j < num_arms_; ++j) sigma_[j] += rewards[j];
  }

 private:
  double eta_;
  std::vector<double> sigma_;
};

class FtplLearner : public Learner {
 public:
  FtplLearner(int k, double width) : Learner(k), width_(width), sigma_(k, 0.0) {}
  const std::vector<double>& Play() override {
    dist_ = FtplDistribution(sigma_, width_);
    return dist_;
  }
  void Update(const std::vector<double>& rewards, int) override {
    RequireArg(static_cast<int>(rewards.size()) == num_arms_,
               "FtplLearner: reward width mismatch");
    for (int j = 0; j < num_arms_; ++j) sigma_[j] += rewards[j];
  }

 private:
  double width_;
  std::vector<double> sigma_;
};

class FtlLearner : public Learner {
 public:
  FtlLearner(int k, double slack) : Learner(k), slack_(slack), sigma_(k, 0.0) {}
  const std::vector<double>& Play() override {
    dist_ = FtlDistribution(sigma_, slack_);
    return dist_;
  }
  void Update(const std::vector<double>& rewards, int) override {
    RequireArg(static_cast<int>(rewards.size()) == num_arms_,
               "FtlLearner: reward width mismatch");
    for (int j = 0; j < num_arms_; ++j) sigma_[j] += rewards[j];
  }

 private:
  double slack_;
  std::vector<double> sigma_;
};

class Exp3Learner : public Learner {
 public:
  Exp3Learner(int k, double rate, double scale)
      : Learner(k),
        rate_(rate),
        explore_(std::min(1.0, k * rate)),
        scale_(scale),
        shat_(k, 0.0) {}

  const std::vector<double>& Play() override {
    double m = *std::max_element(shat_.begin(), shat_.end());
    double s = 0;
    for (int j = 0; j < num_arms_; ++j) {
      dist_[j] = std::exp(rate_ * (shat_[j] - m));
      s += dist_[j];
    }
    for (int j = 0; j < num_arms_; ++j)
      dist_[j] = (1 - explore_) * dist_[j] / s + explore_ / num_arms_;
    played_ = true;
    return dist_;
  }

  void Update(const std::vector<double>& rewards, int chosen_arm) override {
    Require(played_, "Exp3Learner: Update before Play");
    RequireArg(chosen_arm >= 0 && chosen_arm < num_arms_,
               "Exp3Learner: chosen arm out of range");
    // Bandit feedback: only the chosen entry is read. Rewards are shifted
    // from [-scale, scale] into [0, 1] before importance weighting.
    double r01 = (rewards.at(chosen_arm) + scale_) / (2 * scale_);
    r01 = std::clamp(r01, 0.0, 1.0);
    shat_[chosen_arm] += r01 / dist_[chosen_arm];
    played_ = false;
  }

 private:
  double rate_, explore_, scale_;
  std::vector<double> shat_;
  bool played_ = false;
};

class SwapWrapperLearner : public Learner {
 public:
  SwapWrapperLearner(int k, std::vector<std::unique_ptr<Learner>> inner)
      : Learner(k), inner_(std::move(inner)), q_(k), scaled_(k, 0.0) {}

  const std::vector<double>& Play() override {
    for (int i = 0; i < num_arms_; ++i) q_[i] = inner_[i]->Play();
    dist_ = StationaryDistribution(q_);
    played_ = true;
    return dist_;
  }

  void Update(const std::vector<double>& rewards, int chosen_arm) override {
    Require(played_, "SwapWrapperLearner: Update before Play");
    for (int i = 0; i < num_arms_; ++i) {
      for (int j = 0; j < num_arms_; ++j) scaled_[j] = dist_[i] * rewards[j];
      inner_[i]->Update(scaled_, chosen_arm);
    }
    played_ = false;
  }

 private:
  std::vector<std::unique_ptr<Learner>> inner_;
  std::vector<std::vector<double>> q_;
  std::vector<double> scaled_;
  bool played_ = false;
};

class AdversarialMeanBasedLearner : public Learner {
 public:
  AdversarialMeanBasedLearner(int k, double slack,
                              std::vector<std::vector<double>> u_opt)
      : Learner(k), slack_(slack), u_opt_(std::move(u_opt)), sigma_(k, 0.0) {}

  void ObserveOptimizer(const MixedStrategy& alpha) override {
    RequireArg(alpha.probs.size() == u_opt_.size(),
               "AdversarialMeanBasedLearner: alpha size mismatch");
    alpha_ = alpha;
    armed_ = true;
  }

  const std::vector<double>& Play() override {
    Require(armed_,
            "AdversarialMeanBasedLearner: white-box learner needs "
            "ObserveOptimizer before every Play");
    double lead = *std::max_element(sigma_.begin(), sigma_.end());
    // Candidate set: arms strictly within slack of the leader (the leaders
    // themselves always qualify). Among them, hurt the optimizer most.
    int pick = -1;
    double worst = std::numeric_limits<double>::infinity();
    for (int j = 0; j < num_arms_; ++j) {
      double gap = lead - sigma_[j];
      if (gap > 0 && gap >= slack_) continue;
      double v = 0;
      for (size_t a = 0; a < u_opt_.size(); ++a)
        v += alpha_[static_cast<int>(a)] * u_opt_[a][j];
      if (v < worst - 1e-15) {
        worst = v;
        pick = j;
      }
    }
    Require(pick >= 0, "AdversarialMeanBasedLearner: empty candidate set");
    std::fill(dist_.begin(), dist_.end(), 0.0);
    dist_[pick] = 1.0;
    armed_ = false;
    return dist_;
  }

  void Update(const std::vector<double>& rewards, int) override {
    RequireArg(static_cast<int>(rewards.size()) == num_arms_,
               "AdversarialMeanBasedLearner: reward width mismatch");
    for (int j = 0; j < num_arms_; ++j) sigma_[j] += rewards[j];
  }

 private:
  double slack_;
  std::vector<std::vector<double>> u_opt_;
  std::vector<double> sigma_;
  MixedStrategy alpha_;
  bool armed_ = false;
};

}  // namespace

std::unique_ptr<Learner> MakeLearner(const LearnerConfig& config, int num_arms,
                                     std::int64_t horizon, double reward_scale,
                                     const Game* game) {
  config.Validate();
  RequireArg(num_arms >= 1, "MakeLearner: needs at least one arm");
  RequireArg(horizon >= 1, "MakeLearner: horizon must be >= 1");
  RequireArg(reward_scale > 0, "MakeLearner: reward scale must be > 0");
  const double t = static_cast<double>(horizon);
  const double lnk = std::log(static_cast<double>(num_arms));

  switch (config.algorithm) {
    case LearnerAlgorithm::kMultiplicativeWeights: {
      double eta = config.rate > 0 ? config.rate : std::sqrt(lnk / t);
      return std::make_unique<MwLearner>(num_arms, eta);
    }
    case LearnerAlgorithm::kFollowThePerturbedLeader: {
      double width =
          config.perturbation > 0 ? config.perturbation : std::sqrt(t);
      return std::make_unique<FtplLearner>(num_arms, width);
    }
    case LearnerAlgorithm::kFollowTheLeader: {
      double gamma = config.gamma > 0 ? config.gamma : 1.0 / std::sqrt(t);
      return std::make_unique<FtlLearner>(num_arms, gamma * t);
    }
    case LearnerAlgorithm::kExp3: {
      double rate =
          config.rate > 0 ? config.rate : std::sqrt(lnk / (t * num_arms));
      return std::make_unique<Exp3Learner>(num_arms, rate, reward_scale);
    }
    case LearnerAlgorithm::kSwapWrapper: {
      LearnerConfig inner_config(config.inner);
      inner_config.rate = config.rate;
      inner_config.perturbation = config.perturbation;
      inner_config.seed = config.seed;
      std::vector<std::unique_ptr<Learner>> inner;
      for (int i = 0; i < num_arms; ++i) {
        inner.push_back(
            MakeLearner(inner_config, num_arms, horizon, reward_scale));
      }
      return std::make_unique<SwapWrapperLearner>(num_arms, std::move(inner));
    }
    case LearnerAlgorithm::kAdversarialMeanBased: {
      RequireArg(game != nullptr,
                 "MakeLearner: the white-box adversary needs the game");
      RequireArg(game->num_learner_actions() == num_arms,
                 "MakeLearner: arm count must match the game's learner "
                 "actions");
      double gamma = config.gamma > 0 ? config.gamma : 1.0 / std::sqrt(t);
      return std::make_unique<AdversarialMeanBasedLearner>(
          num_arms, gamma * t, game->optimizer_payoffs);
    }
  }
  throw std::invalid_argument("MakeLearner: unknown algorithm");
}

}  // namespace regretgame
