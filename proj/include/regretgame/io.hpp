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

#ifndef REGRETGAME_IO_HPP_
#define REGRETGAME_IO_HPP_

#include <string>
#include <vector>

#include "regretgame/control.hpp"
#include "regretgame/game.hpp"
#include "regretgame/optimizers.hpp"
#include "regretgame/simulate.hpp"

namespace regretgame {

// JSON game files: optimizer_actions, learner_actions, optimizer_payoffs,
// learner_payoffs (both M x N, row player first), scale. All loaders throw
// std::runtime_error with the file path in the message on malformed input.
Game ParseGame(const std::string& text, const std::string& context = "game");
Game LoadGame(const std::string& path);
std::string GameToJson(const Game& game);
void SaveGame(const Game& game, const std::string& path);

// JSON policy files: {"steps": [{"alpha": [...], "t": <duration>}]}.
Policy ParsePolicy(const std::string& text,
                   const std::string& context = "policy");
Policy LoadPolicy(const std::string& path);
std::string PolicyToJson(const Policy& policy);
void SavePolicy(const Policy& policy, const std::string& path);

// Round-by-round log of one match as CSV. Columns: t (1-based round),
// chosen (0-based arm), p_1..p_K (play distribution), r_1..r_K (reward
// vector), sigma_1..sigma_K (cumulative rewards). Doubles are written with
// 17 significant digits and round-trip exactly.
struct TraceFile {
  RewardTrace trace;
  std::vector<std::vector<double>> play;
};

void WriteTraceCsv(const std::string& path, const RewardTrace& trace,
                   const std::vector<std::vector<double>>& play);
TraceFile ReadTraceCsv(const std::string& path);

// One row per successful run: config_id,seed,T,optimizer_avg,regret,
// swap_regret. Failed runs (non-empty error) are skipped.
void WriteResultsCsv(const std::string& path,
                     const std::vector<MatchResult>& results);

// Search results as JSON with labels resolved to learner action names.
std::string SearchResultToJson(const Game& game, const SearchResult& result);
void SaveSearchResult(const Game& game, const SearchResult& result,
                      const std::string& path);

}  // namespace regretgame

#endif  // REGRETGAME_IO_HPP_
