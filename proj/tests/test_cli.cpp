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

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "regretgame/io.hpp"
#include "regretgame/learners.hpp"
#include "regretgame/optimizers.hpp"

namespace regretgame {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliResult RunCli(const std::string& args) {
  static int counter = 0;
  const std::string tag = std::to_string(counter++);
  const std::string out_path = "cli_stdout_" + tag + ".txt";
  const std::string err_path = "cli_stderr_" + tag + ".txt";
  const std::string cmd = std::string(REGRETGAME_BIN) + " " + args + " > " +
                          out_path + " 2> " + err_path;
  int status = std::system(cmd.c_str());
  CliResult result;
  if (WIFEXITED(status)) result.code = WEXITSTATUS(status);
  result.out = Slurp(out_path);
  result.err = Slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

bool Contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

// The first number printed immediately after `prefix`.
double NumberAfter(const std::string& text, const std::string& prefix) {
  auto pos = text.find(prefix);
  REQUIRE_NE(pos, std::string::npos);
  return std::strtod(text.c_str() + pos + prefix.size(), nullptr);
}

const std::string kDataDir = REGRETGAME_DATA_DIR;

}  // namespace

TEST_SUITE("command line") {

TEST_CASE("stackelberg on the bundled game") {
  CliResult r =
      RunCli("stackelberg --game " + kDataDir + "/games/table1_eps005.json");
  CHECK_EQ(r.code, 0);
  CHECK(Contains(r.out, "commitment: 0.5 0.5"));
  CHECK(Contains(r.out, "response: Right"));
  CHECK_LE(std::fabs(NumberAfter(r.out, "\nvalue: ")), 1e-9);
  CHECK(Contains(r.out, "column Mid: -2"));

  r = RunCli("stackelberg --builtin twocap --verify 50");
  CHECK_EQ(r.code, 0);
  CHECK_LE(std::fabs(NumberAfter(r.out, "\nvalue: ") - 2.8), 1e-9);
  CHECK(Contains(r.out, "grid value:"));
}

TEST_CASE("stackelberg conservative details") {
  CliResult r = RunCli("stackelberg --builtin bait --conservative 0.5");
  CHECK_EQ(r.code, 0);
  CHECK(Contains(r.out, "conservative commitment:"));
  CHECK(Contains(r.out, "conservative target: Right"));
  CHECK(Contains(r.out, "conservative margin:"));
}

TEST_CASE("simulate writes per-run lines and a results file") {
  fs::create_directories("cli_sim");
  CliResult r = RunCli(
      "simulate --builtin bait --rounds 500 --seeds 2 --mode sampled "
      "--out cli_sim");
  CHECK_EQ(r.code, 0);
  CHECK_LE(std::fabs(NumberAfter(r.out, "stackelberg_value=")), 1e-9);
  CHECK(Contains(r.out, "id=mw-s1"));
  CHECK(Contains(r.out, "id=mw-s2"));
  CHECK(Contains(r.out, "optimizer_avg="));
  CHECK(Contains(r.out, "wrote cli_sim/results.csv"));

  std::string csv = Slurp("cli_sim/results.csv");
  CHECK(Contains(csv, "config_id"));
  CHECK(Contains(csv, "mw-s1,"));
  CHECK(Contains(csv, "mw-s2,"));
  fs::remove_all("cli_sim");
}

TEST_CASE("simulate traces audit clean for a matching learner") {
  fs::create_directories("cli_audit");
  CliResult r = RunCli(
      "simulate --builtin bait --learner ftl --rounds 400 --mode expected "
      "--traces --out cli_audit");
  CHECK_EQ(r.code, 0);
  const std::string trace_path = "cli_audit/trace-ftl-s1.csv";
  REQUIRE(fs::exists(trace_path));

  // Default audit slack matches the learner's default slack at this length.
  CliResult audit = RunCli("audit --trace " + trace_path);
  CHECK_EQ(audit.code, 0);
  CHECK(Contains(audit.out, "rounds: 400"));
  CHECK(Contains(audit.out, "regret:"));
  CHECK(Contains(audit.out, "swap_regret:"));
  CHECK(Contains(audit.out, "violations: 0"));
  fs::remove_all("cli_audit");
}

TEST_CASE("audit flags a stubborn trace") {
  fs::create_directories("cli_audit2");
  RewardTrace trace(2);
  std::vector<std::vector<double>> play;
  for (int t = 0; t < 10; ++t) {
    trace.Append({0, 1}, 0);
    play.push_back({1.0, 0.0});
  }
  const std::string path = "cli_audit2/stubborn.csv";
  WriteTraceCsv(path, trace, play);

  CliResult r = RunCli("audit --trace " + path + " --gamma 0.1");
  CHECK_EQ(r.code, 4);
  CHECK(Contains(r.out, "violations: 8"));
  CHECK(Contains(r.out, "round 3 arm 0"));
  fs::remove_all("cli_audit2");
}

TEST_CASE("control search verifies against the grid oracle") {
  CliResult r = RunCli(
      "control-search --builtin pennies --max-steps 2 --resolution 10 "
      "--threads 1 --verify");
  CHECK_EQ(r.code, 0);
  CHECK_LE(std::fabs(NumberAfter(r.out, "stackelberg value: ")), 1e-9);
  CHECK_LE(std::fabs(NumberAfter(r.out, "\nvalue: ")), 1e-9);
  CHECK(Contains(r.out, "kind: path"));
  CHECK_LE(std::fabs(NumberAfter(r.out, "grid value: ")), 1e-9);
}

TEST_CASE("evaluate the built-in plan on the limit game") {
  CliResult r = RunCli("evaluate --builtin bait-eps0");
  CHECK_EQ(r.code, 0);
  CHECK_LE(std::fabs(NumberAfter(r.out, "value: ") - 1.0), 1e-12);
  CHECK(Contains(r.out, "label=Left"));
  CHECK(Contains(r.out, "label=Right"));
}

TEST_CASE("policy files drive evaluate and simulate") {
  fs::create_directories("cli_policy");
  SavePolicy(BaitAndSwitchPolicy(), "cli_policy/plan.json");

  CliResult r =
      RunCli("evaluate --builtin bait-eps0 --policy cli_policy/plan.json");
  CHECK_EQ(r.code, 0);
  CHECK_LE(std::fabs(NumberAfter(r.out, "value: ") - 1.0), 1e-12);

  r = RunCli(
      "simulate --builtin bait --schedule policy --policy "
      "cli_policy/plan.json --rounds 100 --out cli_policy");
  CHECK_EQ(r.code, 0);
  fs::remove_all("cli_policy");
}

TEST_CASE("random games flow back through the solver") {
  fs::create_directories("cli_rand");
  CliResult r = RunCli(
      "gen-random --m 2 --n 3 --game-seed 9 --out cli_rand/rand.json");
  CHECK_EQ(r.code, 0);
  REQUIRE(fs::exists("cli_rand/rand.json"));

  r = RunCli("stackelberg --game cli_rand/rand.json --verify 100");
  CHECK_EQ(r.code, 0);
  CHECK(Contains(r.out, "grid value:"));

  // Without --out the game prints to stdout as JSON.
  r = RunCli("gen-random --m 2 --n 2 --game-seed 3");
  CHECK_EQ(r.code, 0);
  CHECK(Contains(r.out, "learner_payoffs"));
  fs::remove_all("cli_rand");
}

TEST_CASE("bad invocations fail cleanly") {
  CHECK_NE(RunCli("no-such-command").code, 0);
  CHECK_NE(RunCli("audit").code, 0);  // --trace is required

  CliResult r = RunCli("simulate --builtin nope --rounds 100");
  CHECK_EQ(r.code, 1);
  CHECK(Contains(r.err, "error:"));

  r = RunCli("stackelberg --game does_not_exist.json");
  CHECK_EQ(r.code, 1);
  CHECK(Contains(r.err, "error:"));

  r = RunCli("simulate --builtin bait --learner exp3 --mode expected "
             "--rounds 100");
  CHECK_EQ(r.code, 1);  // per-run error surfaces in the exit status
}

}  // TEST_SUITE("command line")

}  // namespace regretgame
