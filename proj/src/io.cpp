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

#include "regretgame/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace regretgame {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& context, const std::string& what) {
  throw std::runtime_error(context + ": " + what);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(path, "cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(path, "cannot open for writing");
  out << text;
  if (!out) Fail(path, "write failed");
}

json ParseJson(const std::string& text, const std::string& context) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) Fail(context, "invalid JSON");
  return j;
}

std::vector<double> NumberList(const json& j, const std::string& context) {
  if (!j.is_array()) Fail(context, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) Fail(context, "expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::string Fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Game ParseGame(const std::string& text, const std::string& context) {
  json j = ParseJson(text, context);
  Game game;
  try {
    game.optimizer_actions =
        j.at("optimizer_actions").get<std::vector<std::string>>();
    game.learner_actions =
        j.at("learner_actions").get<std::vector<std::string>>();
    for (const auto& row : j.at("optimizer_payoffs"))
      game.optimizer_payoffs.push_back(NumberList(row, context));
    for (const auto& row : j.at("learner_payoffs"))
      game.learner_payoffs.push_back(NumberList(row, context));
    game.scale = j.at("scale").get<double>();
  } catch (const json::exception& e) {
    Fail(context, e.what());
  }
  try {
    game.Validate();
  } catch (const std::exception& e) {
    Fail(context, e.what());
  }
  return game;
}

Game LoadGame(const std::string& path) {
  return ParseGame(ReadFile(path), path);
}

std::string GameToJson(const Game& game) {
  json j;
  j["optimizer_actions"] = game.optimizer_actions;
  j["learner_actions"] = game.learner_actions;
  j["optimizer_payoffs"] = game.optimizer_payoffs;
  j["learner_payoffs"] = game.learner_payoffs;
  j["scale"] = game.scale;
  return j.dump(2) + "\n";
}

void SaveGame(const Game& game, const std::string& path) {
  WriteFile(path, GameToJson(game));
}

Policy ParsePolicy(const std::string& text, const std::string& context) {
  json j = ParseJson(text, context);
  Policy policy;
  try {
    for (const auto& step : j.at("steps")) {
      PolicyStep s;
      s.alpha = MixedStrategy(NumberList(step.at("alpha"), context));
      s.duration = step.at("t").get<double>();
      policy.steps.push_back(std::move(s));
    }
  } catch (const json::exception& e) {
    Fail(context, e.what());
  }
  if (policy.steps.empty()) Fail(context, "policy has no steps");
  return policy;
}

Policy LoadPolicy(const std::string& path) {
  return ParsePolicy(ReadFile(path), path);
}

std::string PolicyToJson(const Policy& policy) {
  json steps = json::array();
  for (const auto& step : policy.steps)
    steps.push_back({{"alpha", step.alpha.probs}, {"t", step.duration}});
  return json{{"steps", steps}}.dump(2) + "\n";
}

void SavePolicy(const Policy& policy, const std::string& path) {
  WriteFile(path, PolicyToJson(policy));
}

void WriteTraceCsv(const std::string& path, const RewardTrace& trace,
                   const std::vector<std::vector<double>>& play) {
  RequireArg(play.size() == trace.rewards.size(),
             "WriteTraceCsv: play and trace lengths differ");
  const int k = trace.num_arms;
  std::ostringstream out;
  out << "t,chosen";
  for (const char* prefix : {"p", "r", "sigma"}) {
    for (int j = 1; j <= k; ++j) out << ',' << prefix << '_' << j;
  }
  out << '\n';
  for (int t = 0; t < trace.num_rounds(); ++t) {
    out << (t + 1) << ',' << trace.chosen[t];
    for (const std::vector<double>* cols :
         {&play[t], &trace.rewards[t], &trace.cumulative[t]}) {
      for (int j = 0; j < k; ++j) out << ',' << Fmt((*cols)[j]);
    }
    out << '\n';
  }
  WriteFile(path, out.str());
}

TraceFile ReadTraceCsv(const std::string& path) {
  std::istringstream in(ReadFile(path));
  std::string line;
  if (!std::getline(in, line)) Fail(path, "empty trace file");

  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream row(s);
    while (std::getline(row, field, ',')) out.push_back(field);
    return out;
  };

  std::vector<std::string> header = split(line);
  if (header.size() < 5 || header[0] != "t" || header[1] != "chosen" ||
      (header.size() - 2) % 3 != 0)
    Fail(path, "unrecognized trace header");
  const int k = static_cast<int>((header.size() - 2) / 3);

  TraceFile out;
  out.trace = RewardTrace(k);
  int expected_t = 1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields = split(line);
    if (fields.size() != header.size())
      Fail(path, "row " + std::to_string(expected_t) + " has wrong width");
    std::vector<double> values;
    try {
      for (const auto& f : fields) values.push_back(std::stod(f));
    } catch (const std::exception&) {
      Fail(path, "row " + std::to_string(expected_t) + " is not numeric");
    }
    if (static_cast<int>(values[0]) != expected_t)
      Fail(path, "rounds are not consecutive from 1");
    int chosen = static_cast<int>(values[1]);
    std::vector<double> p(values.begin() + 2, values.begin() + 2 + k);
    std::vector<double> r(values.begin() + 2 + k, values.begin() + 2 + 2 * k);
    out.play.push_back(std::move(p));
    out.trace.Append(r, chosen);
    for (int j = 0; j < k; ++j) {
      if (std::fabs(out.trace.cumulative.back()[j] - values[2 + 2 * k + j]) >
          1e-6)
        Fail(path, "cumulative column inconsistent at round " +
                       std::to_string(expected_t));
    }
    ++expected_t;
  }
  if (out.trace.num_rounds() == 0) Fail(path, "trace has no rounds");
  return out;
}

void WriteResultsCsv(const std::string& path,
                     const std::vector<MatchResult>& results) {
  std::ostringstream out;
  out << "config_id,seed,T,optimizer_avg,regret,swap_regret\n";
  for (const auto& r : results) {
    if (!r.ok()) continue;
    out << r.id << ',' << r.seed << ',' << r.num_rounds << ','
        << Fmt(r.optimizer_average) << ',' << Fmt(r.regret) << ','
        << Fmt(r.swap_regret) << '\n';
  }
  WriteFile(path, out.str());
}

std::string SearchResultToJson(const Game& game, const SearchResult& result) {
  json steps = json::array();
  for (const auto& step : result.annotated.steps) {
    steps.push_back({{"alpha", step.alpha.probs},
                     {"t", step.duration},
                     {"label", game.learner_actions[step.label]}});
  }
  json j;
  j["value"] = result.value;
  j["kind"] = result.kind == PolicyKind::kCycle ? "cycle" : "path";
  j["lambda"] = result.lambda;
  j["steps"] = steps;
  j["waypoints"] = result.annotated.waypoints;
  return j.dump(2) + "\n";
}

void SaveSearchResult(const Game& game, const SearchResult& result,
                      const std::string& path) {
  WriteFile(path, SearchResultToJson(game, result));
}

}  // namespace regretgame
