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

#include "regretgame/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "regretgame/lp.hpp"

namespace regretgame {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kTieTol = 1e-12;

void GridPoints(int slots, int left, std::vector<double>& cur, int resolution,
                std::vector<std::vector<double>>& out) {
  if (slots == 1) {
    cur.push_back(static_cast<double>(left) / resolution);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int c = 0; c <= left; ++c) {
    cur.push_back(static_cast<double>(c) / resolution);
    GridPoints(slots - 1, left - c, cur, resolution, out);
    cur.pop_back();
  }
}

std::vector<std::vector<double>> SimplexGridPoints(int slots, int resolution) {
  std::vector<std::vector<double>> out;
  std::vector<double> cur;
  GridPoints(slots, resolution, cur, resolution, out);
  return out;
}

// Closed interval arithmetic for one-dimensional feasibility.
struct Interval {
  double lo = 0;
  double hi = 1;
  bool empty = false;

  // Impose c + d * t >= 0.
  void Require(double c, double d) {
    if (std::fabs(d) <= 1e-14) {
      if (c < -kTieTol) empty = true;
      return;
    }
    double bound = -c / d;
    if (d > 0) {
      lo = std::max(lo, bound);
    } else {
      hi = std::min(hi, bound);
    }
    if (lo > hi + 1e-9) empty = true;
  }
};

// Is {x : rows[i] . x <= rhs[i]} nonempty? Dimension 1 or 2 only; callers
// include box rows, so the region is bounded and any nonempty instance has
// a vertex where two constraint lines meet.
bool PolyFeasible(int dim, const std::vector<std::vector<double>>& rows,
                  const std::vector<double>& rhs) {
  const double tol = 1e-7;
  const size_t m = rows.size();
  if (dim == 1) {
    double lo = -std::numeric_limits<double>::infinity(), hi = -lo;
    for (size_t i = 0; i < m; ++i) {
      double a = rows[i][0], b = rhs[i];
      if (std::fabs(a) <= 1e-14) {
        if (b < -tol) return false;
      } else if (a > 0) {
        hi = std::min(hi, b / a);
      } else {
        lo = std::max(lo, b / a);
      }
    }
    return lo <= hi + tol;
  }
  auto ok = [&](double x, double y) {
    for (size_t k = 0; k < m; ++k) {
      if (rows[k][0] * x + rows[k][1] * y > rhs[k] + tol) return false;
    }
    return true;
  };
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      double det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
      if (std::fabs(det) <= 1e-12) continue;
      double x = (rhs[i] * rows[j][1] - rows[i][1] * rhs[j]) / det;
      double y = (rows[i][0] * rhs[j] - rhs[i] * rows[j][0]) / det;
      if (ok(x, y)) return true;
    }
  }
  return false;
}

}  // namespace

GridStackelbergResult GridStackelberg(const Game& game, int resolution) {
  game.Validate();
  RequireArg(resolution >= 1, "GridStackelberg: resolution must be >= 1");
  const int m = game.num_optimizer_actions();
  const int n = game.num_learner_actions();

  GridStackelbergResult best;
  best.value = kNegInf;
  for (const auto& alpha : SimplexGridPoints(m, resolution)) {
    double lrn_best = kNegInf;
    std::vector<double> lrn(n), opt(n);
    for (int j = 0; j < n; ++j) {
      lrn[j] = 0;
      opt[j] = 0;
      for (int a = 0; a < m; ++a) {
        lrn[j] += alpha[a] * game.u_lrn(a, j);
        opt[j] += alpha[a] * game.u_opt(a, j);
      }
      lrn_best = std::max(lrn_best, lrn[j]);
    }
    // Optimistic learner: among best responses, take the optimizer-best.
    double value = kNegInf;
    int response = -1;
    for (int j = 0; j < n; ++j) {
      if (lrn[j] >= lrn_best - kProbTol && opt[j] > value) {
        value = opt[j];
        response = j;
      }
    }
    if (value > best.value) {
      best.value = value;
      best.alpha = alpha;
      best.response = response;
    }
  }
  return best;
}

double TwoStepGridValue(const Game& game, int resolution, bool include_cycles,
                        const std::vector<double>& lambdas) {
  game.Validate();
  RequireArg(resolution >= 1, "TwoStepGridValue: resolution must be >= 1");
  const int m = game.num_optimizer_actions();
  const int n = game.num_learner_actions();

  // Per grid point: learner and optimizer payoffs per column. Membership of
  // a cumulative-payoff point in a label's cone is a direct comparison of
  // learner columns, so no reduced state is needed here.
  std::vector<std::vector<double>> grid = SimplexGridPoints(m, resolution);
  const int gsz = static_cast<int>(grid.size());
  std::vector<std::vector<double>> ul(gsz, std::vector<double>(n)),
      uo(gsz, std::vector<double>(n));
  for (int g = 0; g < gsz; ++g) {
    for (int j = 0; j < n; ++j) {
      for (int a = 0; a < m; ++a) {
        ul[g][j] += grid[g][a] * game.u_lrn(a, j);
        uo[g][j] += grid[g][a] * game.u_opt(a, j);
      }
    }
  }
  std::vector<double> colmax(n, kNegInf);
  for (int j = 0; j < n; ++j)
    for (int g = 0; g < gsz; ++g) colmax[j] = std::max(colmax[j], uo[g][j]);

  double best = kNegInf;

  // Single steps: the drift must stay in the labeled cone.
  for (int g = 0; g < gsz; ++g) {
    double top = *std::max_element(ul[g].begin(), ul[g].end());
    for (int r = 0; r < n; ++r) {
      if (ul[g][r] >= top - kTieTol) best = std::max(best, uo[g][r]);
    }
  }

  // Two steps with different labels. The switch point must lie on the
  // common face of both cones, so the first commitment must make both
  // labels maximal; the duration split then ranges over an interval and the
  // value is linear in it.
  for (int g1 = 0; g1 < gsz; ++g1) {
    double top = *std::max_element(ul[g1].begin(), ul[g1].end());
    std::vector<int> face;
    for (int r = 0; r < n; ++r) {
      if (ul[g1][r] >= top - kTieTol) face.push_back(r);
    }
    if (face.size() < 2) continue;
    for (int r1 : face) {
      for (int r2 : face) {
        if (r1 == r2 || std::max(uo[g1][r1], colmax[r2]) <= best) continue;
        for (int g2 = 0; g2 < gsz; ++g2) {
          double c1 = uo[g1][r1], c2 = uo[g2][r2];
          if (std::max(c1, c2) <= best) continue;
          Interval iv;
          for (int q = 0; q < n; ++q) {
            double b = ul[g2][r2] - ul[g2][q];
            double a = (ul[g1][r2] - ul[g1][q]) - b;
            iv.Require(b, a);  // end state stays in the second cone
          }
          if (iv.empty) continue;
          double lo = std::clamp(iv.lo, 0.0, 1.0);
          double hi = std::clamp(iv.hi, 0.0, 1.0);
          best = std::max(best, lo * c1 + (1 - lo) * c2);
          best = std::max(best, hi * c1 + (1 - hi) * c2);
        }
      }
    }
  }

  // Scaling loops. With the two durations summing to one, every endpoint
  // condition is linear in the split t for lambda > 1 (the start is
  // determined by the drifts), so feasibility is an interval and the value
  // sits at an endpoint. For lambda = 1 the zero-drift condition pins t (or
  // leaves it free when both drifts vanish) and the start point only has to
  // exist inside a bounded polygon; that existence check is written for up
  // to two dimensions, so lambda = 1 loops are skipped when n > 3.
  if (include_cycles && n >= 2) {
    const int dim = n - 1;
    const double bound = 4 * game.scale;
    std::vector<std::vector<double>> disp(gsz, std::vector<double>(dim));
    for (int g = 0; g < gsz; ++g)
      for (int c = 0; c < dim; ++c) disp[g][c] = ul[g][c] - ul[g][n - 1];
    auto ext = [&](const std::vector<double>& v, int r) {
      return r < dim ? v[r] : 0.0;
    };
    // Visiting grid points in decreasing payoff order lets both loops stop
    // as soon as no remaining pair can beat the incumbent.
    std::vector<std::vector<int>> order(n, std::vector<int>(gsz));
    for (int r = 0; r < n; ++r) {
      std::iota(order[r].begin(), order[r].end(), 0);
      std::stable_sort(order[r].begin(), order[r].end(),
                       [&](int a, int b) { return uo[a][r] > uo[b][r]; });
    }
    std::vector<double> pa(dim), pb(dim), w1c(dim), w1f(dim), w2c(dim),
        w2f(dim), mid(dim), zero(dim, 0.0);
    for (int r1 = 0; r1 < n; ++r1) {
      for (int r2 = 0; r2 < n; ++r2) {
        if (r1 == r2) continue;
        for (int g1 : order[r1]) {
          double c1 = uo[g1][r1];
          if (std::max(c1, colmax[r2]) <= best) break;
          const std::vector<double>& d1 = disp[g1];
          for (int g2 : order[r2]) {
            double c2 = uo[g2][r2];
            if (std::max(c1, c2) <= best) break;
            const std::vector<double>& d2 = disp[g2];
            for (double lambda : lambdas) {
              if (lambda > 1 + kTieTol) {
                // p = (t d1 + (1 - t) d2) / (lambda - 1), linear in t.
                for (int c = 0; c < dim; ++c) {
                  pa[c] = d2[c] / (lambda - 1);
                  pb[c] = (d1[c] - d2[c]) / (lambda - 1);
                  w1c[c] = pa[c];
                  w1f[c] = pb[c] + d1[c];
                  w2c[c] = lambda * pa[c];
                  w2f[c] = lambda * pb[c];
                }
                Interval iv;
                auto member = [&](const std::vector<double>& cst,
                                  const std::vector<double>& cof, int r) {
                  for (int q = 0; q < n && !iv.empty; ++q) {
                    if (q == r) continue;
                    iv.Require(ext(cst, r) - ext(cst, q),
                               ext(cof, r) - ext(cof, q));
                  }
                };
                member(pa, pb, r1);    // start in the first cone
                member(w1c, w1f, r1);  // switch still in the first cone
                member(w1c, w1f, r2);  // ... and already in the second
                member(w2c, w2f, r2);  // scaled end in the second cone
                if (iv.empty) continue;
                double lo = std::clamp(iv.lo, 0.0, 1.0);
                double hi = std::clamp(iv.hi, 0.0, 1.0);
                best = std::max(best, lo * c1 + (1 - lo) * c2);
                best = std::max(best, hi * c1 + (1 - hi) * c2);
              } else if (dim <= 2) {
                // lambda = 1: t d1 + (1 - t) d2 = 0 componentwise.
                bool ok = true, varying = false;
                double root = 0;
                for (int c = 0; c < dim && ok; ++c) {
                  double a = d1[c] - d2[c];
                  if (std::fabs(a) <= 1e-14) {
                    ok = std::fabs(d2[c]) <= kTieTol;
                  } else {
                    double rc = -d2[c] / a;
                    if (varying && std::fabs(rc - root) > 1e-9) ok = false;
                    root = rc;
                    varying = true;
                  }
                }
                if (!ok) continue;
                std::vector<double> cands;
                if (varying) {
                  if (root < -kTieTol || root > 1 + kTieTol) continue;
                  cands.push_back(std::clamp(root, 0.0, 1.0));
                } else {
                  cands = {0.0, 1.0};
                }
                for (double t : cands) {
                  if (t * c1 + (1 - t) * c2 <= best) continue;
                  std::vector<std::vector<double>> rows;
                  std::vector<double> rhs;
                  for (int c = 0; c < dim; ++c) {
                    std::vector<double> row(dim, 0.0);
                    row[c] = 1;
                    rows.push_back(row);
                    rhs.push_back(bound);
                    row[c] = -1;
                    rows.push_back(std::move(row));
                    rhs.push_back(bound);
                  }
                  auto member_p = [&](const std::vector<double>& shift, int r) {
                    for (int q = 0; q < n; ++q) {
                      if (q == r) continue;
                      std::vector<double> row(dim, 0.0);
                      if (q < dim) row[q] += 1;
                      if (r < dim) row[r] -= 1;
                      rows.push_back(std::move(row));
                      rhs.push_back(ext(shift, r) - ext(shift, q));
                    }
                  };
                  for (int c = 0; c < dim; ++c) mid[c] = t * d1[c];
                  member_p(zero, r1);  // start in the first cone
                  member_p(mid, r1);   // switch in the first cone
                  member_p(mid, r2);   // switch in the second cone
                  member_p(zero, r2);  // end: zero drift returns to p
                  if (PolyFeasible(dim, rows, rhs))
                    best = std::max(best, t * c1 + (1 - t) * c2);
                }
              }
            }
          }
        }
      }
    }
  }
  return best;
}

std::vector<std::pair<int, int>> PureNashEquilibria(const Game& game) {
  game.Validate();
  const int m = game.num_optimizer_actions();
  const int n = game.num_learner_actions();
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < n; ++b) {
      bool nash = true;
      for (int a2 = 0; a2 < m && nash; ++a2) {
        if (game.u_opt(a2, b) > game.u_opt(a, b) + kTieTol) nash = false;
      }
      for (int b2 = 0; b2 < n && nash; ++b2) {
        if (game.u_lrn(a, b2) > game.u_lrn(a, b) + kTieTol) nash = false;
      }
      if (nash) out.emplace_back(a, b);
    }
  }
  return out;
}

double MinimaxValue(const Game& game) {
  game.Validate();
  const int m = game.num_optimizer_actions();
  const int n = game.num_learner_actions();
  // Variables: alpha (m), v (free). Maximize v subject to
  // v <= sum_a alpha_a u_opt(a, b) for every column b.
  LinearProgram lp(m + 1);
  lp.objective[m] = 1.0;
  lp.SetFree(m);
  for (int b = 0; b < n; ++b) {
    std::vector<double> row(m + 1, 0.0);
    for (int a = 0; a < m; ++a) row[a] = -game.u_opt(a, b);
    row[m] = 1.0;
    lp.AddLessEq(std::move(row), 0.0);
  }
  std::vector<double> ones(m + 1, 1.0);
  ones[m] = 0.0;
  lp.AddEq(std::move(ones), 1.0);
  LpResult res = LpSolve(lp);
  Require(res.status == LpStatus::kOptimal, "MinimaxValue: solve failed");
  return res.objective;
}

}  // namespace regretgame
