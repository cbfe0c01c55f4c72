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

// End-to-end acceptance gate. Each criterion prints informational lines and
// exactly one PASS/FAIL verdict; the process exits with the number of failed
// criteria. Thresholds are deliberately hard-coded: they are the product
// contract, not tunables.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "adversarial_streams.hpp"
#include "regretgame/builtin_games.hpp"
#include "regretgame/control.hpp"
#include "regretgame/io.hpp"
#include "regretgame/learners.hpp"
#include "regretgame/optimizers.hpp"
#include "regretgame/oracles.hpp"
#include "regretgame/simulate.hpp"
#include "regretgame/stackelberg.hpp"

namespace regretgame {
namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void Info(int criterion, const char* fmt, ...) {
  std::printf("  [c%d] ", criterion);
  va_list args;
  va_start(args, fmt);
  std::vprintf(fmt, args);
  va_end(args);
  std::printf("\n");
  std::fflush(stdout);
}

bool Verdict(int criterion, bool pass, const std::string& title,
             double seconds) {
  std::printf("%s criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL",
              criterion, title.c_str(), seconds);
  std::fflush(stdout);
  return pass;
}

double Dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int ArgMaxIdx(const std::vector<double>& v) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(v.size()); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best;
}

// Duration-weighted average payoff of an annotated plan under its own
// labels, without re-deriving them.
double AnnotatedAverage(const Game& game, const AnnotatedPolicy& annotated) {
  double value = 0, total = 0;
  for (const AnnotatedStep& step : annotated.steps) {
    value += step.duration *
             UtilityVsPure(game, step.alpha, step.label, Player::kOptimizer);
    total += step.duration;
  }
  return value / total;
}

MatchConfig BaseConfig(const Game& game, const RoundSchedule& schedule,
                       std::int64_t rounds, const LearnerConfig& learner) {
  MatchConfig config;
  config.game = game;
  config.schedule = schedule;
  config.learner = learner;
  config.num_rounds = rounds;
  config.mode = PlayMode::kExpected;
  return config;
}

// Mean optimizer average payoff over seeds 1..num_seeds.
double MeanAverage(MatchConfig config, int num_seeds) {
  double total = 0;
  for (int seed = 1; seed <= num_seeds; ++seed) {
    config.seed = static_cast<std::uint64_t>(seed);
    total += Run(config).optimizer_average;
  }
  return total / num_seeds;
}

// ---------------------------------------------------------------------------
// 1. Exact commitment solver on the bundled three-column game.

bool Criterion1() {
  Stopwatch watch;
  const Game game =
      LoadGame(std::string(REGRETGAME_DATA_DIR) + "/games/table1_eps005.json");
  const StackelbergSolution sol = Stackelberg(game);
  const double elapsed = watch.Seconds();

  bool ok = std::abs(sol.value) <= 1e-9;
  ok = ok && sol.commitment.size() == 2 &&
       std::abs(sol.commitment[0] - 0.5) <= 1e-9 &&
       std::abs(sol.commitment[1] - 0.5) <= 1e-9;
  ok = ok && game.learner_actions[sol.response] == "Right";
  ok = ok && elapsed < 1.0;

  Info(1, "value=%.3e commitment=(%.10f, %.10f) response=%s", sol.value,
       sol.commitment[0], sol.commitment[1],
       game.learner_actions[sol.response].c_str());
  return Verdict(1, ok, "commitment solver nails the bundled game", elapsed);
}

// ---------------------------------------------------------------------------
// 2. The two-phase plan extracts near-best payoff from mean-based learners.

bool Criterion2() {
  Stopwatch watch;
  const std::int64_t rounds = 200000;
  const Game game = BaitAndSwitchGame(0.05);
  const RoundSchedule schedule =
      PolicyToSchedule(BaitAndSwitchPolicy(), rounds);

  LearnerConfig mw;  // multiplicative weights at the default rate
  const double mw_mean =
      MeanAverage(BaseConfig(game, schedule, rounds, mw), 20);

  LearnerConfig ftl(LearnerAlgorithm::kFollowTheLeader);
  ftl.gamma = 1.0 / std::sqrt(static_cast<double>(rounds));
  const double ftl_mean =
      MeanAverage(BaseConfig(game, schedule, rounds, ftl), 20);

  // With the quarter-power slack the leader window is ~40x wider and the
  // switch phase is far too short to drain it; reported for reference.
  LearnerConfig ftl_wide(LearnerAlgorithm::kFollowTheLeader);
  ftl_wide.gamma = std::pow(static_cast<double>(rounds), -0.25);
  const double ftl_wide_mean =
      MeanAverage(BaseConfig(game, schedule, rounds, ftl_wide), 20);

  const double elapsed = watch.Seconds();
  const bool ok = mw_mean >= 0.8 && ftl_mean >= 0.8 && elapsed < 120.0;

  Info(2, "mw mean_avg=%.4f (need >= 0.8)", mw_mean);
  Info(2, "ftl slack=sqrt(T) mean_avg=%.4f (need >= 0.8)", ftl_mean);
  Info(2, "ftl slack=T^(3/4) mean_avg=%.4f (reference only)", ftl_wide_mean);
  return Verdict(2, ok, "two-phase plan exploits mean-based learners",
                 elapsed);
}

// ---------------------------------------------------------------------------
// 3. The same plan earns almost nothing against a no-swap-regret learner.

bool Criterion3() {
  Stopwatch watch;
  const std::int64_t rounds = 200000;
  const Game game = BaitAndSwitchGame(0.05);
  const RoundSchedule schedule =
      PolicyToSchedule(BaitAndSwitchPolicy(), rounds);

  LearnerConfig swap(LearnerAlgorithm::kSwapWrapper);
  const double mean =
      MeanAverage(BaseConfig(game, schedule, rounds, swap), 20);

  const double elapsed = watch.Seconds();
  const bool ok = mean <= 0.1 && elapsed < 300.0;
  Info(3, "swap-mw mean_avg=%.4f (need <= 0.1)", mean);
  return Verdict(3, ok, "no-swap-regret learner caps the two-phase plan",
                 elapsed);
}

// ---------------------------------------------------------------------------
// 4. Zero-sum sanity: nothing beats the matching-pennies value.

bool Criterion4() {
  Stopwatch watch;
  const std::int64_t rounds = 100000;
  const Game game = MatchingPennies();

  Policy two_phase;
  two_phase.steps.push_back({MixedStrategy::Pure(2, 0), 0.5});
  two_phase.steps.push_back({MixedStrategy::Pure(2, 1), 0.5});
  LearnerConfig mw;
  const double phase_avg =
      Run(BaseConfig(game, PolicyToSchedule(two_phase, rounds), rounds, mw))
          .optimizer_average;

  SearchOptions options;
  options.max_steps = 2;
  options.resolution = 10;
  const SearchResult search = SearchPolicies(game, options);
  const double search_avg =
      Run(BaseConfig(game, PolicyToSchedule(search.policy, rounds), rounds,
                     mw))
          .optimizer_average;

  const double elapsed = watch.Seconds();
  const bool ok = phase_avg <= 0.05 && search_avg <= 0.05 &&
                  std::abs(search.value) <= 1e-6;
  Info(4, "two-phase avg=%.4f, searched-plan avg=%.4f (need <= 0.05)",
       phase_avg, search_avg);
  Info(4, "search value=%.3e (need |v| <= 1e-6)", search.value);
  return Verdict(4, ok, "matching pennies is not exploitable", elapsed);
}

// ---------------------------------------------------------------------------
// 5. Cap game: search attains the commitment value; swap accounting is exact.

bool Criterion5() {
  Stopwatch watch;
  const Game game = TwoActionCap();

  SearchOptions options;
  options.max_steps = 2;
  options.resolution = 20;
  const SearchResult search = SearchPolicies(game, options);
  bool ok = std::abs(search.value - 2.8) <= 1e-6;
  Info(5, "search value=%.8f (need 2.8 +- 1e-6)", search.value);

  // On two arms, swap regret must equal the sum of the per-arm external
  // regrets of the chosen-arm subtraces -- bitwise, on any sampled trace.
  for (std::uint64_t seed : {7ull, 8ull, 9ull}) {
    MatchConfig config;
    config.game = game;
    config.schedule.runs.push_back(
        {MixedStrategy(std::vector<double>{0.4, 0.6}), 2000});
    config.num_rounds = 2000;
    config.mode = PlayMode::kSampled;
    config.keep_trace = true;
    config.seed = seed;
    const MatchResult result = Run(config);
    const double lhs = SwapRegret(result.trace).value;
    const double rhs = Regret(SubTrace(result.trace, 0)) +
                       Regret(SubTrace(result.trace, 1));
    const double diff = lhs - rhs;
    ok = ok && diff == 0.0;
    Info(5, "seed %llu: swap=%.6f per-arm sum=%.6f diff=%.1e",
         static_cast<unsigned long long>(seed), lhs, rhs, diff);
  }
  return Verdict(5, ok, "cap game search and exact swap decomposition",
                 watch.Seconds());
}

// ---------------------------------------------------------------------------
// 6. The conservative commitment holds its floor against no-regret learners.

bool Criterion6() {
  Stopwatch watch;
  const std::int64_t rounds = 100000;
  const Game game = BaitAndSwitchGame(0.05);
  const RoundSchedule schedule = CommitmentSchedule(game, 0.05, rounds);
  const int target = ConservativeCommitment(game, 0.05).target_response;

  struct Leg {
    const char* name;
    double avg = 0;
    double occupancy = 0;  // fraction of rounds on the target response
    bool experts = true;
    bool pass = false;
  };
  std::vector<Leg> legs;

  auto run_experts = [&](const char* name, const LearnerConfig& cfg) {
    const MatchResult r = Run(BaseConfig(game, schedule, rounds, cfg));
    Leg leg;
    leg.name = name;
    leg.avg = r.optimizer_average;
    leg.occupancy = r.play_mass[target] / static_cast<double>(rounds);
    leg.pass = leg.avg >= -0.1 && leg.occupancy >= 0.95;
    legs.push_back(leg);
  };

  LearnerConfig mw;
  mw.rate = 0.05;
  run_experts("mw(rate=0.05)", mw);
  run_experts("ftpl", LearnerConfig(LearnerAlgorithm::kFollowThePerturbedLeader));
  LearnerConfig swap(LearnerAlgorithm::kSwapWrapper);
  swap.rate = 0.1;
  run_experts("swap-mw(rate=0.1)", swap);

  // Bandit feedback: mean over sampled seeds. The floor is out of reach for
  // any rate -- bandit exploration alone leaves the target too often -- so
  // this leg documents the gap rather than hiding it.
  auto exp3_mean = [&](double rate) {
    LearnerConfig exp3(LearnerAlgorithm::kExp3);
    exp3.rate = rate;
    MatchConfig config = BaseConfig(game, schedule, rounds, exp3);
    config.mode = PlayMode::kSampled;
    double avg = 0, occ = 0;
    const int seeds = 5;
    for (int seed = 1; seed <= seeds; ++seed) {
      config.seed = static_cast<std::uint64_t>(seed);
      const MatchResult r = Run(config);
      avg += r.optimizer_average;
      occ += r.play_mass[target] / static_cast<double>(rounds);
    }
    Leg leg;
    leg.name = "exp3";
    leg.avg = avg / seeds;
    leg.occupancy = occ / seeds;
    leg.experts = false;
    leg.pass = leg.avg >= -0.1;
    return leg;
  };
  Leg exp3_leg = exp3_mean(0);
  exp3_leg.name = "exp3(default rate)";
  legs.push_back(exp3_leg);
  // Best rate found by sweeping 0.002..2. Large rates only improve the
  // average by decaying toward uniform play; no rate approaches the floor.
  Leg exp3_best = exp3_mean(0.08);
  exp3_best.name = "exp3(rate=0.08)";

  // Reference values at default rates for the tuned experts legs.
  LearnerConfig mw_default;
  const double mw_default_avg =
      Run(BaseConfig(game, schedule, rounds, mw_default)).optimizer_average;

  bool ok = true;
  for (const Leg& leg : legs) {
    ok = ok && leg.pass;
    Info(6, "%-18s avg=%.4f (need >= -0.1)%s occupancy=%.4f%s -> %s",
         leg.name, leg.avg, leg.experts ? "" : " [bandit]", leg.occupancy,
         leg.experts ? " (need >= 0.95)" : "", leg.pass ? "ok" : "FAIL");
  }
  Info(6, "reference: mw default rate avg=%.4f, best swept exp3 rate=0.08 "
          "avg=%.4f occupancy=%.4f",
       mw_default_avg, exp3_best.avg, exp3_best.occupancy);
  return Verdict(6, ok, "conservative commitment floor", watch.Seconds());
}

// ---------------------------------------------------------------------------
// 7. Plan evaluation: exact value on the limit game, invariances elsewhere.

bool Criterion7() {
  Stopwatch watch;
  const double exact =
      Evaluate(BaitAndSwitchGame(0.0), BaitAndSwitchPolicy());
  bool ok = std::abs(exact - 1.0) <= 1e-12;
  Info(7, "limit-game two-phase value=%.15f (need 1 +- 1e-12)", exact);

  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 2);
    const int n = 2 + static_cast<int>(rng() % 2);
    const Game game = RandomGame(m, n, 5000 + trial);

    Policy policy;
    const int steps = 1 + static_cast<int>(rng() % 4);
    for (int s = 0; s < steps; ++s) {
      std::vector<double> probs(m);
      double total = 0;
      for (double& p : probs) {
        p = unit(rng) + 1e-3;
        total += p;
      }
      for (double& p : probs) p /= total;
      policy.steps.push_back({MixedStrategy(probs), 0.1 + 1.9 * unit(rng)});
    }

    const double base = Evaluate(game, policy);
    auto record = [&](double value) {
      worst = std::max(worst, std::abs(value - base));
    };
    for (double factor : {0.5, 2.0, 7.0}) {
      Policy scaled = policy;
      for (PolicyStep& step : scaled.steps) step.duration *= factor;
      record(Evaluate(game, scaled));
    }
    const AnnotatedPolicy sub = Subdivide(game, policy);
    record(Evaluate(game, sub.ToPolicy()));
    // Merging keeps the annotated value bitwise-close; replaying the merged
    // steps as a fresh policy may only improve (a fused detour can land on
    // a boundary, where the optimistic label rule upgrades the response).
    const AnnotatedPolicy merged = MergeSameLabel(sub);
    record(AnnotatedAverage(game, merged));
    ok = ok && Evaluate(game, merged.ToPolicy()) >= base - 1e-12;
  }
  ok = ok && worst <= 1e-12;
  Info(7, "200 random plans: max drift=%.3e under rescale/split/merge "
          "(need <= 1e-12; merged replays only ever gain)",
       worst);
  return Verdict(7, ok, "plan evaluation is exact and invariant",
                 watch.Seconds());
}

// ---------------------------------------------------------------------------
// 8. Solver vs independent grid oracles on seeded random games.

bool Criterion8() {
  Stopwatch watch;
  std::vector<double> lambdas;
  for (int i = 0; i <= 30; ++i) lambdas.push_back(1.0 + 0.1 * i);

  double worst_stack = 0, worst_search = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 2 + (trial % 2);
    const int n = 2 + ((trial / 2) % 2);
    const Game game = RandomGame(m, n, 9000 + trial);

    const double exact = Stackelberg(game).value;
    const double grid = GridStackelberg(game, 200).value;
    worst_stack = std::max(worst_stack, std::abs(exact - grid));

    SearchOptions options;
    options.max_steps = 2;
    options.resolution = 50;
    options.lambdas = lambdas;
    const double searched = SearchPolicies(game, options).value;
    const double oracle = TwoStepGridValue(game, 50, true, lambdas);
    worst_search = std::max(worst_search, std::abs(searched - oracle));
  }

  const double elapsed = watch.Seconds();
  const bool ok = worst_stack <= 1e-2 && worst_search <= 1e-2;
  Info(8, "max |exact - grid| stackelberg=%.3e (need <= 1e-2)", worst_stack);
  Info(8, "max |search - oracle| two-step=%.3e (need <= 1e-2)", worst_search);
  return Verdict(8, ok, "solvers agree with grid oracles on 50 random games",
                 elapsed);
}

// ---------------------------------------------------------------------------
// 9. Learner guarantees: regret bounds and mean-based cleanliness.

bool Criterion9() {
  Stopwatch watch;
  const int rounds = 100000;
  const double scale = 2.0;
  const double gamma = std::pow(static_cast<double>(rounds), -0.25);

  bool ok = true;
  double worst_mw = 0, worst_swap = 0;
  int violations = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int arms = 2 + static_cast<int>(seed % 3);
    const auto rewards = AdversarialStream(seed, rounds, arms, scale);
    const double mw_bound =
        3.0 * scale * std::sqrt(rounds * std::log(static_cast<double>(arms)));
    const double swap_bound =
        6.0 * scale *
        std::sqrt(rounds * arms * std::log(static_cast<double>(arms)));

    // Multiplicative weights: expected regret against the best fixed arm.
    {
      LearnerConfig cfg;
      auto learner = MakeLearner(cfg, arms, rounds, scale);
      std::vector<double> column(arms, 0.0);
      double gained = 0;
      RewardTrace trace(arms);
      std::vector<std::vector<double>> play;
      play.reserve(rounds);
      for (int t = 0; t < rounds; ++t) {
        const std::vector<double>& p = learner->Play();
        play.push_back(p);
        gained += Dot(p, rewards[t]);
        for (int j = 0; j < arms; ++j) column[j] += rewards[t][j];
        trace.Append(rewards[t], ArgMaxIdx(p));
        learner->Update(rewards[t], trace.chosen.back());
      }
      const double regret = column[ArgMaxIdx(column)] - gained;
      worst_mw = std::max(worst_mw, regret / mw_bound);
      ok = ok && regret <= mw_bound;
      violations += static_cast<int>(MeanBasedAudit(trace, play, gamma).size());
    }

    // Swap wrapper around multiplicative weights: distribution-weighted
    // swap regret.
    {
      LearnerConfig cfg(LearnerAlgorithm::kSwapWrapper);
      auto learner = MakeLearner(cfg, arms, rounds, scale);
      std::vector<std::vector<double>> weighted(
          arms, std::vector<double>(arms, 0.0));
      for (int t = 0; t < rounds; ++t) {
        const std::vector<double>& p = learner->Play();
        for (int a = 0; a < arms; ++a) {
          for (int j = 0; j < arms; ++j) {
            weighted[a][j] += p[a] * rewards[t][j];
          }
        }
        learner->Update(rewards[t], 0);
      }
      double swap = 0;
      for (int a = 0; a < arms; ++a) {
        swap += weighted[a][ArgMaxIdx(weighted[a])] - weighted[a][a];
      }
      worst_swap = std::max(worst_swap, swap / swap_bound);
      ok = ok && swap <= swap_bound;
    }

    // Perturbed leader is mean-based too: audit its play.
    {
      LearnerConfig cfg(LearnerAlgorithm::kFollowThePerturbedLeader);
      auto learner = MakeLearner(cfg, arms, rounds, scale);
      RewardTrace trace(arms);
      std::vector<std::vector<double>> play;
      play.reserve(rounds);
      for (int t = 0; t < rounds; ++t) {
        const std::vector<double>& p = learner->Play();
        play.push_back(p);
        trace.Append(rewards[t], ArgMaxIdx(p));
        learner->Update(rewards[t], trace.chosen.back());
      }
      violations += static_cast<int>(MeanBasedAudit(trace, play, gamma).size());
    }
  }
  ok = ok && violations == 0;

  Info(9, "mw regret worst ratio=%.3f of 3*scale*sqrt(T ln K)", worst_mw);
  Info(9, "swap regret worst ratio=%.3f of 6*scale*sqrt(T K ln K)", worst_swap);
  Info(9, "mean-based audit violations=%d across 40 traces (need 0)",
       violations);
  return Verdict(9, ok, "regret bounds and mean-based audits hold",
                 watch.Seconds());
}

}  // namespace
}  // namespace regretgame

int main() {
  using namespace regretgame;
  int failed = 0;
  bool (*criteria[])() = {Criterion1, Criterion2, Criterion3,
                          Criterion4, Criterion5, Criterion6,
                          Criterion7, Criterion8, Criterion9};
  for (int i = 0; i < 9; ++i) {
    try {
      if (!criteria[i]()) ++failed;
    } catch (const std::exception& e) {
      std::printf("FAIL criterion %d: unexpected exception: %s\n", i + 1,
                  e.what());
      ++failed;
    }
  }
  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed;
}
