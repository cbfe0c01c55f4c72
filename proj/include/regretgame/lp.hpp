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

#ifndef REGRETGAME_LP_HPP_
#define REGRETGAME_LP_HPP_

#include <vector>

#include "regretgame/common.hpp"

namespace regretgame {

enum class ConstraintSense { kLessEq, kEq };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

// maximize objective . x subject to the rows and x_i >= 0, except variables
// marked free (handled internally by sign splitting).
struct LinearProgram {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  std::vector<ConstraintSense> senses;
  std::vector<bool> free_vars;

  explicit LinearProgram(int n = 0) { Resize(n); }
  void Resize(int n);
  void AddLessEq(std::vector<double> row, double bound);
  void AddEq(std::vector<double> row, double bound);
  void SetFree(int var) { free_vars.at(var) = true; }
};

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0;
  std::vector<double> x;
};

// Dense two-phase simplex with Bland's rule (no cycling). Sized for the
// small programs used here: tens of variables and rows.
LpResult LpSolve(const LinearProgram& lp);

}  // namespace regretgame

#endif  // REGRETGAME_LP_HPP_
