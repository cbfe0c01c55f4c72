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

#include "regretgame/lp.hpp"

#include <cmath>

namespace regretgame {
namespace {

constexpr double kEps = 1e-9;
constexpr double kFeasTol = 1e-7;
constexpr int kMaxIters = 200000;

struct Tableau {
  int m = 0, ncols = 0;
  std::vector<std::vector<double>> a;  // m x ncols
  std::vector<double> b;               // m
  std::vector<int> basis;              // m, column index
  // Objective rows in reduced form: z[j] = c_B B^-1 A_j - c_j. Optimal for a
  // maximization when all z[j] >= 0. zval = current objective value.
  std::vector<double> z1, z2;
  double z1val = 0, z2val = 0;

  void Pivot(int row, int col, bool both_rows) {
    double piv = a[row][col];
    double inv = 1.0 / piv;
    for (int j = 0; j < ncols; ++j) a[row][j] *= inv;
    b[row] *= inv;
    a[row][col] = 1.0;
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      double f = a[i][col];
      if (f == 0.0) continue;
      for (int j = 0; j < ncols; ++j) a[i][j] -= f * a[row][j];
      a[i][col] = 0.0;
      b[i] -= f * b[row];
      if (std::fabs(b[i]) < 1e-11) b[i] = 0.0;
    }
    auto elim = [&](std::vector<double>& zrow, double& zv) {
      double f = zrow[col];
      if (f == 0.0) return;
      for (int j = 0; j < ncols; ++j) zrow[j] -= f * a[row][j];
      zrow[col] = 0.0;
      zv -= f * b[row];
    };
    if (both_rows) elim(z1, z1val);
    elim(z2, z2val);
    basis[row] = col;
  }
};

}  // namespace

void LinearProgram::Resize(int n) {
  RequireArg(n >= 0, "LinearProgram: negative variable count");
  num_vars = n;
  objective.assign(n, 0.0);
  free_vars.assign(n, false);
  rows.clear();
  rhs.clear();
  senses.clear();
}

void LinearProgram::AddLessEq(std::vector<double> row, double bound) {
  RequireArg(static_cast<int>(row.size()) == num_vars,
             "LinearProgram: row width mismatch");
  rows.push_back(std::move(row));
  rhs.push_back(bound);
  senses.push_back(ConstraintSense::kLessEq);
}

void LinearProgram::AddEq(std::vector<double> row, double bound) {
  RequireArg(static_cast<int>(row.size()) == num_vars,
             "LinearProgram: row width mismatch");
  rows.push_back(std::move(row));
  rhs.push_back(bound);
  senses.push_back(ConstraintSense::kEq);
}

LpResult LpSolve(const LinearProgram& lp) {
  RequireArg(static_cast<int>(lp.objective.size()) == lp.num_vars &&
                 static_cast<int>(lp.free_vars.size()) == lp.num_vars,
             "LpSolve: malformed program");
  const int m = static_cast<int>(lp.rows.size());

  // Split columns: every variable gets a nonnegative column; free variables
  // get a second, negated one.
  std::vector<int> pos(lp.num_vars), neg(lp.num_vars, -1);
  int nsplit = 0;
  for (int v = 0; v < lp.num_vars; ++v) {
    pos[v] = nsplit++;
    if (lp.free_vars[v]) neg[v] = nsplit++;
  }

  // Column layout: [0, nsplit) variables, then one slack/surplus per
  // inequality row, then all artificials at the end.
  std::vector<int> row_slack(m, -1), row_art(m, -1);
  int ncols = nsplit;
  std::vector<bool> flip(m, false);
  for (int i = 0; i < m; ++i) {
    flip[i] = lp.rhs[i] < 0;
    if (lp.senses[i] == ConstraintSense::kLessEq) row_slack[i] = ncols++;
  }
  const int first_art = ncols;
  for (int i = 0; i < m; ++i) {
    // A flipped <= becomes >= with nonnegative rhs: its slack column turns
    // into a surplus, so it needs an artificial. Equalities always do.
    if (lp.senses[i] == ConstraintSense::kEq || flip[i]) row_art[i] = ncols++;
  }

  Tableau t;
  t.m = m;
  t.ncols = ncols;
  t.a.assign(m, std::vector<double>(ncols, 0.0));
  t.b.assign(m, 0.0);
  t.basis.assign(m, -1);
  t.z1.assign(ncols, 0.0);
  t.z2.assign(ncols, 0.0);

  for (int i = 0; i < m; ++i) {
    double sgn = flip[i] ? -1.0 : 1.0;
    for (int v = 0; v < lp.num_vars; ++v) {
      double c = sgn * lp.rows[i][v];
      t.a[i][pos[v]] = c;
      if (neg[v] >= 0) t.a[i][neg[v]] = -c;
    }
    t.b[i] = sgn * lp.rhs[i];
    if (row_slack[i] >= 0) t.a[i][row_slack[i]] = sgn;
    if (row_art[i] >= 0) {
      t.a[i][row_art[i]] = 1.0;
      t.basis[i] = row_art[i];
    } else {
      t.basis[i] = row_slack[i];
    }
  }

  // Phase-2 objective over split columns (phase-1 cost is -1 per artificial).
  std::vector<double> c2(ncols, 0.0);
  for (int v = 0; v < lp.num_vars; ++v) {
    c2[pos[v]] = lp.objective[v];
    if (neg[v] >= 0) c2[neg[v]] = -lp.objective[v];
  }
  for (int j = 0; j < ncols; ++j) t.z2[j] = -c2[j];
  // z1 = c_B1 . rows - c1 with c1 = -1 on artificials, basis cost applied.
  for (int j = 0; j < ncols; ++j) {
    double s = 0;
    for (int i = 0; i < m; ++i)
      if (t.basis[i] >= first_art) s -= t.a[i][j];
    t.z1[j] = s + (j >= first_art ? 1.0 : 0.0);
  }
  for (int i = 0; i < m; ++i)
    if (t.basis[i] >= first_art) t.z1val -= t.b[i];

  auto run_phase = [&](bool phase1) -> LpStatus {
    std::vector<double>& z = phase1 ? t.z1 : t.z2;
    for (int iter = 0; iter < kMaxIters; ++iter) {
      // Bland: entering column = smallest index with negative reduced cost.
      int e = -1;
      for (int j = 0; j < ncols; ++j) {
        if (!phase1 && j >= first_art) break;
        if (z[j] < -kEps) {
          e = j;
          break;
        }
      }
      if (e < 0) return LpStatus::kOptimal;
      int r = -1;
      double best = 0;
      for (int i = 0; i < m; ++i) {
        if (t.a[i][e] <= kEps) continue;
        double ratio = t.b[i] / t.a[i][e];
        if (r < 0 || ratio < best - kEps ||
            (ratio < best + kEps && t.basis[i] < t.basis[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r < 0) return LpStatus::kUnbounded;
      t.Pivot(r, e, phase1);
    }
    return LpStatus::kIterationLimit;
  };

  LpResult res;
  if (first_art < ncols) {
    LpStatus s1 = run_phase(true);
    if (s1 == LpStatus::kIterationLimit) {
      res.status = s1;
      return res;
    }
    if (t.z1val < -kFeasTol) {
      res.status = LpStatus::kInfeasible;
      return res;
    }
    // Drive artificials out of the basis where possible; rows where no pivot
    // exists are redundant (all-zero over real columns) and stay inert.
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < first_art) continue;
      for (int j = 0; j < first_art; ++j) {
        if (std::fabs(t.a[i][j]) > kEps) {
          t.Pivot(i, j, true);
          break;
        }
      }
    }
  }

  res.status = run_phase(false);
  if (res.status == LpStatus::kIterationLimit ||
      res.status == LpStatus::kUnbounded)
    return res;

  std::vector<double> xs(ncols, 0.0);
  for (int i = 0; i < m; ++i) xs[t.basis[i]] = t.b[i];
  res.x.assign(lp.num_vars, 0.0);
  for (int v = 0; v < lp.num_vars; ++v) {
    res.x[v] = xs[pos[v]] - (neg[v] >= 0 ? xs[neg[v]] : 0.0);
  }
  res.objective = Dot(lp.objective, res.x);
  res.status = LpStatus::kOptimal;
  return res;
}

}  // namespace regretgame
