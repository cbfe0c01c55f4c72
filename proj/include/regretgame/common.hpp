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

#ifndef REGRETGAME_COMMON_HPP_
#define REGRETGAME_COMMON_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace regretgame {

// Tolerance used for probability / tie comparisons throughout.
inline constexpr double kProbTol = 1e-9;

inline void RequireArg(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline void Require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

inline double Dot(const std::vector<double>& a, const std::vector<double>& b) {
  RequireArg(a.size() == b.size(), "Dot: size mismatch");
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double Sum(const std::vector<double>& a) {
  double s = 0;
  for (double v : a) s += v;
  return s;
}

}  // namespace regretgame

#endif  // REGRETGAME_COMMON_HPP_
