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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "regretgame/builtin_games.hpp"
#include "regretgame/control.hpp"
#include "regretgame/io.hpp"
#include "regretgame/learners.hpp"
#include "regretgame/optimizers.hpp"
#include "regretgame/oracles.hpp"
#include "regretgame/simulate.hpp"
#include "regretgame/stackelberg.hpp"

namespace {

using namespace regretgame;

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string Probs(const MixedStrategy& s) {
  std::string out;
  for (int i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += Num(s[i]);
  }
  return out;
}

// Shared --game / --builtin selection.
struct GameOpts {
  std::string path;
  std::string builtin;

  void Attach(CLI::App* cmd) {
    auto* g = cmd->add_option("--game", path, "game JSON file");
    cmd->add_option("--builtin", builtin,
                    "built-in game: bait, bait-eps0, pennies, twocap")
        ->excludes(g);
  }

  Game Load() const {
    if (!path.empty()) return LoadGame(path);
    if (builtin == "bait" || builtin.empty()) return BaitAndSwitchGame();
    if (builtin == "bait-eps0") return BaitAndSwitchGame(0.0);
    if (builtin == "pennies") return MatchingPennies();
    if (builtin == "twocap") return TwoActionCap();
    throw std::invalid_argument("unknown built-in game: " + builtin);
  }
};

LearnerConfig ParseLearner(const std::string& name, double rate, double width,
                           double gamma, std::uint64_t seed) {
  LearnerConfig config;
  if (name == "mw") {
    config = LearnerConfig(LearnerAlgorithm::kMultiplicativeWeights);
  } else if (name == "ftpl") {
    config = LearnerConfig(LearnerAlgorithm::kFollowThePerturbedLeader);
  } else if (name == "ftl") {
    config = LearnerConfig(LearnerAlgorithm::kFollowTheLeader);
  } else if (name == "exp3") {
    config = LearnerConfig(LearnerAlgorithm::kExp3);
  } else if (name == "swap-mw" || name == "swap-ftpl") {
    config = LearnerConfig(LearnerAlgorithm::kSwapWrapper);
    config.inner = name == "swap-mw"
                       ? LearnerAlgorithm::kMultiplicativeWeights
                       : LearnerAlgorithm::kFollowThePerturbedLeader;
  } else if (name == "adversarial") {
    config = LearnerConfig(LearnerAlgorithm::kAdversarialMeanBased);
  } else {
    throw std::invalid_argument("unknown learner: " + name);
  }
  config.rate = rate;
  config.perturbation = width;
  config.gamma = gamma;
  config.seed = seed;
  return config;
}

int RunStackelberg(const GameOpts& gopts, double conservative_delta,
                   int verify_resolution) {
  Game game = gopts.Load();
  StackelbergSolution sol = Stackelberg(game);
  std::cout << "commitment: " << Probs(sol.commitment) << '\n';
  std::cout << "response: " << game.learner_actions[sol.response] << '\n';
  std::cout << "value: " << Num(sol.value) << '\n';
  for (int j = 0; j < game.num_learner_actions(); ++j) {
    std::cout << "column " << game.learner_actions[j] << ": "
              << (std::isinf(sol.column_values[j])
                      ? std::string("infeasible")
                      : Num(sol.column_values[j]))
              << '\n';
  }
  if (game.num_learner_actions() >= 2) {
    for (int j = 0; j < game.num_learner_actions(); ++j) {
      if (IsWeaklyDominated(game, j).dominated)
        std::cout << "note: learner action " << game.learner_actions[j]
                  << " is weakly dominated\n";
    }
  }
  if (conservative_delta > 0) {
    Commitment c = ConservativeCommitment(game, conservative_delta);
    std::cout << "conservative commitment: " << Probs(c.strategy) << '\n';
    std::cout << "conservative target: "
              << game.learner_actions[c.target_response] << '\n';
    std::cout << "conservative margin: " << Num(c.margin) << '\n';
  }
  if (verify_resolution > 0) {
    GridStackelbergResult grid = GridStackelberg(game, verify_resolution);
    double diff = std::fabs(grid.value - sol.value);
    std::cout << "grid value: " << Num(grid.value)
              << " (diff " << Num(diff) << ")\n";
  }
  return 0;
}

int RunSimulate(const GameOpts& gopts, const std::string& schedule_type,
                const std::string& policy_path, double delta,
                const std::string& learner_name, double rate, double width,
                double gamma, std::uint64_t learner_seed,
                std::int64_t rounds, const std::string& mode_name,
                int num_seeds, std::uint64_t seed_base, bool traces,
                const std::string& out_dir, int threads) {
  Game game = gopts.Load();

  RoundSchedule schedule;
  if (schedule_type == "policy") {
    if (policy_path.empty())
      throw std::invalid_argument("--schedule policy needs --policy FILE");
    schedule = PolicyToSchedule(LoadPolicy(policy_path), rounds);
  } else if (schedule_type == "commitment") {
    schedule = CommitmentSchedule(game, delta, rounds);
  } else if (schedule_type == "bait") {
    schedule = PolicyToSchedule(BaitAndSwitchPolicy(), rounds);
  } else {
    throw std::invalid_argument("unknown schedule type: " + schedule_type);
  }

  PlayMode mode;
  if (mode_name == "expected") {
    mode = PlayMode::kExpected;
  } else if (mode_name == "sampled") {
    mode = PlayMode::kSampled;
  } else {
    throw std::invalid_argument("unknown mode: " + mode_name);
  }

  std::vector<MatchConfig> configs;
  for (int s = 0; s < num_seeds; ++s) {
    MatchConfig config;
    config.game = game;
    config.schedule = schedule;
    config.learner =
        ParseLearner(learner_name, rate, width, gamma, learner_seed);
    config.num_rounds = rounds;
    config.mode = mode;
    config.seed = seed_base + static_cast<std::uint64_t>(s);
    config.keep_trace = traces;
    config.id = learner_name + "-s" + std::to_string(config.seed);
    configs.push_back(std::move(config));
  }

  std::filesystem::create_directories(out_dir);
  std::cout << "stackelberg_value=" << Num(Stackelberg(game).value) << '\n';
  std::vector<MatchResult> results = Sweep(configs, threads);
  bool any_error = false;
  for (const auto& r : results) {
    if (!r.ok()) {
      any_error = true;
      std::cerr << "error: " << r.id << ": " << r.error << '\n';
      continue;
    }
    std::cout << "id=" << r.id << " seed=" << r.seed
              << " optimizer_avg=" << Num(r.optimizer_average)
              << " regret=" << Num(r.regret)
              << " swap_regret=" << Num(r.swap_regret) << '\n';
    if (traces)
      WriteTraceCsv(out_dir + "/trace-" + r.id + ".csv", r.trace, r.play);
  }
  std::string results_path = out_dir + "/results.csv";
  WriteResultsCsv(results_path, results);
  std::cout << "wrote " << results_path << '\n';
  return any_error ? 1 : 0;
}

int RunAudit(const std::string& trace_path, double gamma) {
  TraceFile file = ReadTraceCsv(trace_path);
  const int rounds = file.trace.num_rounds();
  if (gamma <= 0) gamma = 1.0 / std::sqrt(static_cast<double>(rounds));
  std::vector<MeanBasedViolation> violations =
      MeanBasedAudit(file.trace, file.play, gamma);
  std::cout << "rounds: " << rounds << '\n';
  std::cout << "gamma: " << Num(gamma) << '\n';
  std::cout << "regret: " << Num(Regret(file.trace)) << '\n';
  std::cout << "swap_regret: " << Num(SwapRegret(file.trace).value) << '\n';
  std::cout << "violations: " << violations.size() << '\n';
  for (size_t i = 0; i < violations.size() && i < 5; ++i) {
    const auto& v = violations[i];
    std::cout << "  round " << (v.round + 1) << " arm " << v.arm << " prob "
              << Num(v.prob) << " deficit " << Num(v.deficit) << '\n';
  }
  return violations.empty() ? 0 : 4;
}

int RunControlSearch(const GameOpts& gopts, int max_steps, int resolution,
                     bool no_cycles, int threads, const std::string& out_path,
                     bool verify) {
  Game game = gopts.Load();
  SearchOptions options;
  options.max_steps = max_steps;
  options.resolution = resolution;
  options.include_cycles = !no_cycles;
  options.threads = threads;
  SearchResult result = SearchPolicies(game, options);

  std::cout << "stackelberg value: " << Num(Stackelberg(game).value) << '\n';
  std::cout << "value: " << Num(result.value) << '\n';
  std::cout << "kind: "
            << (result.kind == PolicyKind::kCycle ? "cycle" : "path") << '\n';
  if (result.kind == PolicyKind::kCycle)
    std::cout << "lambda: " << Num(result.lambda) << '\n';
  for (const auto& step : result.annotated.steps) {
    std::cout << "step: alpha=[" << Probs(step.alpha) << "] t="
              << Num(step.duration) << " label="
              << game.learner_actions[step.label] << '\n';
  }
  if (!out_path.empty()) {
    SaveSearchResult(game, result, out_path);
    std::cout << "wrote " << out_path << '\n';
  }
  if (verify) {
    if (max_steps == 2) {
      // Same default lambda ladder as the search.
      std::vector<double> ladder = options.lambdas;
      if (ladder.empty()) {
        for (int i = 0; i <= 30; ++i) ladder.push_back(1.0 + 0.1 * i);
      }
      double oracle = TwoStepGridValue(game, resolution, !no_cycles, ladder);
      double diff = std::fabs(oracle - result.value);
      std::cout << "grid value: " << Num(oracle) << " (diff " << Num(diff)
                << ")\n";
    } else {
      std::cout << "verify: skipped (needs --max-steps 2)\n";
    }
  }
  return 0;
}

int RunEvaluate(const GameOpts& gopts, const std::string& policy_path) {
  Game game = gopts.Load();
  Policy policy = policy_path.empty() ? BaitAndSwitchPolicy()
                                      : LoadPolicy(policy_path);
  double value = Evaluate(game, policy);
  AnnotatedPolicy merged = MergeSameLabel(Subdivide(game, policy));
  std::cout << "value: " << Num(value) << '\n';
  for (const auto& step : merged.steps) {
    std::cout << "segment: alpha=[" << Probs(step.alpha) << "] t="
              << Num(step.duration) << " label="
              << game.learner_actions[step.label] << '\n';
  }
  return 0;
}

int RunGenRandom(int m, int n, std::uint64_t seed, int lo, int hi,
                 const std::string& out_path) {
  Game game = RandomGame(m, n, seed, lo, hi);
  if (out_path.empty()) {
    std::cout << GameToJson(game);
  } else {
    SaveGame(game, out_path);
    std::cout << "wrote " << out_path << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commitment optimization against no-regret learners"};
  app.require_subcommand(1);
  int rc = 0;

  GameOpts stack_game;
  double conservative_delta = 0;
  int verify_resolution = 0;
  auto* stack = app.add_subcommand(
      "stackelberg", "optimal commitment against a best-responding learner");
  stack_game.Attach(stack);
  stack->add_option("--conservative", conservative_delta,
                    "also print the conservative commitment for this delta");
  stack->add_option("--verify", verify_resolution,
                    "cross-check against a simplex grid of this resolution");
  stack->callback([&] {
    rc = RunStackelberg(stack_game, conservative_delta, verify_resolution);
  });

  GameOpts sim_game;
  std::string schedule_type = "bait", policy_path, learner_name = "mw";
  std::string mode_name = "expected", out_dir = ".";
  double delta = 0.05, rate = 0, width = 0, gamma = 0;
  std::uint64_t learner_seed = 0, seed_base = 1;
  std::int64_t rounds = 10000;
  int num_seeds = 1, sim_threads = 1;
  bool traces = false;
  auto* sim = app.add_subcommand("simulate",
                                 "play a commitment schedule against an "
                                 "online learner");
  sim_game.Attach(sim);
  sim->add_option("--schedule", schedule_type,
                  "schedule type: bait, policy, commitment");
  sim->add_option("--policy", policy_path, "policy JSON (for --schedule "
                  "policy)");
  sim->add_option("--delta", delta, "conservative mixing weight");
  sim->add_option("--learner", learner_name,
                  "mw, ftpl, ftl, exp3, swap-mw, swap-ftpl, adversarial");
  sim->add_option("--rate", rate, "learning rate (0 = default schedule)");
  sim->add_option("--width", width, "perturbation width (0 = default)");
  sim->add_option("--gamma", gamma, "mean-based slack (0 = default)");
  sim->add_option("--learner-seed", learner_seed, "learner seed component");
  sim->add_option("--rounds", rounds, "rounds per match");
  sim->add_option("--mode", mode_name, "expected or sampled");
  sim->add_option("--seeds", num_seeds, "number of match seeds");
  sim->add_option("--seed-base", seed_base, "first match seed");
  sim->add_flag("--traces", traces, "write per-match trace CSVs");
  sim->add_option("--out", out_dir, "output directory");
  sim->add_option("--threads", sim_threads, "parallel matches (0 = all)");
  sim->callback([&] {
    rc = RunSimulate(sim_game, schedule_type, policy_path, delta,
                     learner_name, rate, width, gamma, learner_seed, rounds,
                     mode_name, num_seeds, seed_base, traces, out_dir,
                     sim_threads);
  });

  std::string trace_path;
  double audit_gamma = 0;
  auto* audit = app.add_subcommand(
      "audit", "check a trace against the mean-based play property");
  audit->add_option("--trace", trace_path, "trace CSV")->required();
  audit->add_option("--gamma", audit_gamma,
                    "slack (0 = 1/sqrt(rounds))");
  audit->callback([&] { rc = RunAudit(trace_path, audit_gamma); });

  GameOpts search_game;
  int max_steps = 3, resolution = 20, search_threads = 0;
  bool no_cycles = false, verify = false;
  std::string search_out;
  auto* search = app.add_subcommand(
      "control-search", "best piecewise-constant commitment plan against "
                        "mean-based play");
  search_game.Attach(search);
  search->add_option("--max-steps", max_steps, "max plan length");
  search->add_option("--resolution", resolution, "commitment grid density");
  search->add_flag("--no-cycles", no_cycles, "skip scaling loops");
  search->add_option("--threads", search_threads, "worker threads (0 = all)");
  search->add_option("--out", search_out, "write the plan as JSON");
  search->add_flag("--verify", verify,
                   "cross-check against the closed-form two-step grid");
  search->callback([&] {
    rc = RunControlSearch(search_game, max_steps, resolution, no_cycles,
                          search_threads, search_out, verify);
  });

  GameOpts eval_game;
  std::string eval_policy;
  auto* eval = app.add_subcommand(
      "evaluate", "mean-based play value of a commitment policy");
  eval_game.Attach(eval);
  eval->add_option("--policy", eval_policy,
                   "policy JSON (default: built-in bait plan)");
  eval->callback([&] { rc = RunEvaluate(eval_game, eval_policy); });

  int gen_m = 2, gen_n = 2, gen_lo = -2, gen_hi = 2;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-random", "write a random game");
  gen->add_option("--m", gen_m, "optimizer actions");
  gen->add_option("--n", gen_n, "learner actions");
  gen->add_option("--game-seed", gen_seed, "generator seed");
  gen->add_option("--lo", gen_lo, "payoff lower bound");
  gen->add_option("--hi", gen_hi, "payoff upper bound");
  gen->add_option("--out", gen_out, "output path (default: stdout)");
  gen->callback(
      [&] { rc = RunGenRandom(gen_m, gen_n, gen_seed, gen_lo, gen_hi,
                              gen_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
