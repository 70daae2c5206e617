// Copyright 2026 the fmolp authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fmolp/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fmolp::lp {

namespace {

constexpr double kPivotEps = 1e-11;

void check_well_formed(const LinearProgram& lp) {
  if (lp.n_vars < 1) throw std::invalid_argument("MalformedProblem: n_vars must be >= 1");
  if (static_cast<int>(lp.objective.size()) != lp.n_vars)
    throw std::invalid_argument("MalformedProblem: objective length != n_vars");
  for (double c : lp.objective)
    if (!std::isfinite(c)) throw std::invalid_argument("MalformedProblem: non-finite objective coefficient");
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    const LpRow& r = lp.rows[i];
    if (static_cast<int>(r.coeffs.size()) != lp.n_vars)
      throw std::invalid_argument("MalformedProblem: row " + std::to_string(i) + " length != n_vars");
    if (!std::isfinite(r.rhs))
      throw std::invalid_argument("MalformedProblem: row " + std::to_string(i) + " has non-finite rhs");
    for (double a : r.coeffs)
      if (!std::isfinite(a))
        throw std::invalid_argument("MalformedProblem: row " + std::to_string(i) + " has non-finite coefficient");
  }
}

// Dense tableau with an explicit basis. Rows 0..m-1 hold [A | b]; the reduced
// cost row is kept separately (entry `cols` carries minus the objective value).
struct Tableau {
  int m = 0;
  int cols = 0;
  std::vector<std::vector<double>> t;  // m rows of cols+1
  std::vector<int> basis;              // basic column per row

  void pivot(int r, int jc, std::vector<double>& cost) {
    std::vector<double>& pr = t[r];
    const double inv = 1.0 / pr[jc];
    for (int j = 0; j <= cols; ++j) pr[j] *= inv;
    pr[jc] = 1.0;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      const double f = t[i][jc];
      if (f == 0.0) continue;
      std::vector<double>& ri = t[i];
      for (int j = 0; j <= cols; ++j) ri[j] -= f * pr[j];
      ri[jc] = 0.0;
    }
    const double cf = cost[jc];
    if (cf != 0.0) {
      for (int j = 0; j <= cols; ++j) cost[j] -= cf * pr[j];
      cost[jc] = 0.0;
    }
    basis[r] = jc;
  }
};

enum class PhaseResult { Optimal, Unbounded };

// Minimization pricing: enter while some reduced cost is below -eps_opt.
PhaseResult run_phase(Tableau& tab, std::vector<double>& cost, const std::vector<char>& banned,
                      double eps_opt, int& iterations, int bland_after) {
  const int hard_cap = 20000 + 200 * (tab.m + tab.cols);
  for (;;) {
    const bool bland = iterations >= bland_after;
    int jc = -1;
    if (bland) {
      for (int j = 0; j < tab.cols; ++j)
        if (!banned[j] && cost[j] < -eps_opt) { jc = j; break; }
    } else {
      double best = -eps_opt;
      for (int j = 0; j < tab.cols; ++j)
        if (!banned[j] && cost[j] < best) { best = cost[j]; jc = j; }
    }
    if (jc < 0) return PhaseResult::Optimal;

    int r = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < tab.m; ++i) {
      const double a = tab.t[i][jc];
      if (a <= kPivotEps) continue;
      const double ratio = tab.t[i][tab.cols] / a;
      if (ratio < best_ratio - 1e-12 ||
          (ratio < best_ratio + 1e-12 && (r < 0 || tab.basis[i] < tab.basis[r]))) {
        best_ratio = ratio;
        r = i;
      }
    }
    if (r < 0) return PhaseResult::Unbounded;
    tab.pivot(r, jc, cost);
    if (++iterations > hard_cap)
      throw std::runtime_error("simplex failed to terminate within the iteration cap");
  }
}

// Core: maximize c*x subject to rows, x >= 0.
LpOutcome solve_max(const std::vector<double>& c, const std::vector<LpRow>& rows_in, int n,
                    const SimplexOptions& opt) {
  // Normalize to rhs >= 0.
  std::vector<LpRow> rows = rows_in;
  for (LpRow& r : rows) {
    if (r.rhs < 0.0) {
      for (double& a : r.coeffs) a = -a;
      r.rhs = -r.rhs;
      if (r.rel == Relation::LessEq)
        r.rel = Relation::GreaterEq;
      else if (r.rel == Relation::GreaterEq)
        r.rel = Relation::LessEq;
    }
  }

  const int m = static_cast<int>(rows.size());
  int n_slack = 0, n_art = 0;
  for (const LpRow& r : rows) {
    if (r.rel != Relation::Equal) ++n_slack;
    if (r.rel != Relation::LessEq) ++n_art;
  }

  Tableau tab;
  tab.m = m;
  tab.cols = n + n_slack + n_art;
  tab.t.assign(m, std::vector<double>(tab.cols + 1, 0.0));
  tab.basis.assign(m, -1);

  const int art_begin = n + n_slack;
  std::vector<char> is_artificial(tab.cols, 0);
  {
    int slack_col = n, art_col = art_begin;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) tab.t[i][j] = rows[i].coeffs[j];
      tab.t[i][tab.cols] = rows[i].rhs;
      switch (rows[i].rel) {
        case Relation::LessEq:
          tab.t[i][slack_col] = 1.0;
          tab.basis[i] = slack_col++;
          break;
        case Relation::GreaterEq:
          tab.t[i][slack_col] = -1.0;
          ++slack_col;
          tab.t[i][art_col] = 1.0;
          is_artificial[art_col] = 1;
          tab.basis[i] = art_col++;
          break;
        case Relation::Equal:
          tab.t[i][art_col] = 1.0;
          is_artificial[art_col] = 1;
          tab.basis[i] = art_col++;
          break;
      }
    }
  }

  int iterations = 0;
  const int bland_after = 2 * (tab.cols + m);
  std::vector<char> no_ban(tab.cols, 0);

  // Phase 1: minimize the sum of artificial variables.
  if (n_art > 0) {
    std::vector<double> cost(tab.cols + 1, 0.0);
    for (int j = art_begin; j < tab.cols; ++j) cost[j] = 1.0;
    for (int i = 0; i < m; ++i)
      if (is_artificial[tab.basis[i]])
        for (int j = 0; j <= tab.cols; ++j) cost[j] -= tab.t[i][j];

    if (run_phase(tab, cost, no_ban, opt.eps_opt, iterations, bland_after) == PhaseResult::Unbounded)
      throw std::runtime_error("phase-1 objective reported unbounded");

    double b_scale = 1.0;
    for (const LpRow& r : rows) b_scale = std::max(b_scale, std::abs(r.rhs));
    const double infeasibility = -cost[tab.cols];
    if (infeasibility > 1e-8 * b_scale) {
      LpOutcome out;
      out.status = LpStatus::Infeasible;
      out.iterations = iterations;
      return out;
    }

    // Drive leftover artificials out of the basis; an all-zero pivot row is a
    // redundant constraint and gets dropped.
    for (int i = 0; i < tab.m;) {
      if (!is_artificial[tab.basis[i]]) { ++i; continue; }
      int jc = -1;
      for (int j = 0; j < art_begin; ++j)
        if (std::abs(tab.t[i][j]) > 1e-9) { jc = j; break; }
      if (jc >= 0) {
        tab.pivot(i, jc, cost);
        ++iterations;
        ++i;
      } else {
        tab.t.erase(tab.t.begin() + i);
        tab.basis.erase(tab.basis.begin() + i);
        --tab.m;
      }
    }
  }

  // Phase 2: minimize -c (i.e. maximize c).
  {
    std::vector<double> cost(tab.cols + 1, 0.0);
    for (int j = 0; j < n; ++j) cost[j] = -c[j];
    for (int i = 0; i < tab.m; ++i) {
      const double cb = cost[tab.basis[i]];
      if (cb != 0.0)
        for (int j = 0; j <= tab.cols; ++j) cost[j] -= cb * tab.t[i][j];
    }
    if (run_phase(tab, cost, is_artificial, opt.eps_opt, iterations, bland_after) ==
        PhaseResult::Unbounded) {
      LpOutcome out;
      out.status = LpStatus::Unbounded;
      out.iterations = iterations;
      return out;
    }
  }

  LpOutcome out;
  out.status = LpStatus::Optimal;
  out.iterations = iterations;
  out.x.assign(n, 0.0);
  for (int i = 0; i < tab.m; ++i)
    if (tab.basis[i] < n) out.x[tab.basis[i]] = tab.t[i][tab.cols];
  for (double& v : out.x)
    if (std::abs(v) < 1e-12) v = 0.0;
  out.value = dot(c, out.x);
  return out;
}

// ---- vertex enumeration ------------------------------------------------

struct Hyperplane {
  std::vector<double> a;
  double b;
};

// Solve M x = v by Gaussian elimination with partial pivoting.
// Returns false when (numerically) singular.
bool gauss_solve(std::vector<std::vector<double>> M, std::vector<double> v, std::vector<double>& x) {
  const int n = static_cast<int>(v.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int i = col + 1; i < n; ++i)
      if (std::abs(M[i][col]) > std::abs(M[piv][col])) piv = i;
    if (std::abs(M[piv][col]) < 1e-9) return false;
    std::swap(M[piv], M[col]);
    std::swap(v[piv], v[col]);
    const double inv = 1.0 / M[col][col];
    for (int i = col + 1; i < n; ++i) {
      const double f = M[i][col] * inv;
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) M[i][j] -= f * M[col][j];
      v[i] -= f * v[col];
    }
  }
  x.assign(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = v[i];
    for (int j = i + 1; j < n; ++j) s -= M[i][j] * x[j];
    x[i] = s / M[i][i];
  }
  return true;
}

bool point_feasible(const std::vector<LpRow>& rows, const std::vector<double>& x) {
  for (double v : x)
    if (v < -1e-7) return false;
  for (const LpRow& r : rows) {
    const double tol = 1e-7 * (1.0 + std::abs(r.rhs));
    if (row_violation(r, x) > tol) return false;
  }
  return true;
}

// Every feasible intersection of n active hyperplanes from rows + bounds.
std::vector<std::vector<double>> basic_feasible_points(const std::vector<LpRow>& rows, int n) {
  std::vector<Hyperplane> planes;
  for (const LpRow& r : rows) planes.push_back({r.coeffs, r.rhs});
  for (int j = 0; j < n; ++j) {
    Hyperplane h{std::vector<double>(n, 0.0), 0.0};
    h.a[j] = 1.0;
    planes.push_back(std::move(h));
  }

  std::vector<std::vector<double>> found;
  const int h = static_cast<int>(planes.size());
  if (h < n) return found;

  std::vector<int> combo(n);
  for (int i = 0; i < n; ++i) combo[i] = i;
  for (;;) {
    std::vector<std::vector<double>> M(n, std::vector<double>(n));
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
      M[i] = planes[combo[i]].a;
      v[i] = planes[combo[i]].b;
    }
    std::vector<double> x;
    if (gauss_solve(std::move(M), std::move(v), x) && point_feasible(rows, x)) {
      bool dup = false;
      for (const auto& p : found) {
        double d = 0.0;
        for (int j = 0; j < n; ++j) d = std::max(d, std::abs(p[j] - x[j]));
        if (d < 1e-7) { dup = true; break; }
      }
      if (!dup) found.push_back(std::move(x));
    }
    // next combination
    int k = n - 1;
    while (k >= 0 && combo[k] == h - n + k) --k;
    if (k < 0) break;
    ++combo[k];
    for (int i = k + 1; i < n; ++i) combo[i] = combo[i - 1] + 1;
  }
  return found;
}

// Extreme directions of {r : A_<= r <= 0, A_>= r >= 0, A_= r = 0, r >= 0},
// normalized onto the simplex sum(r) = 1.
std::vector<std::vector<double>> recession_directions(const std::vector<LpRow>& rows, int n) {
  std::vector<LpRow> cone = rows;
  for (LpRow& r : cone) r.rhs = 0.0;
  LpRow simplex;
  simplex.coeffs.assign(n, 1.0);
  simplex.rel = Relation::Equal;
  simplex.rhs = 1.0;
  cone.push_back(std::move(simplex));
  return basic_feasible_points(cone, n);
}

}  // namespace

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

double dot(const std::vector<double>& a, const std::vector<double>& x) {
  double s = 0.0;
  const std::size_t n = std::min(a.size(), x.size());
  for (std::size_t j = 0; j < n; ++j) s += a[j] * x[j];
  return s;
}

double row_violation(const LpRow& row, const std::vector<double>& x) {
  const double g = dot(row.coeffs, x);
  switch (row.rel) {
    case Relation::LessEq: return std::max(0.0, g - row.rhs);
    case Relation::GreaterEq: return std::max(0.0, row.rhs - g);
    case Relation::Equal: return std::abs(g - row.rhs);
  }
  return 0.0;
}

LpOutcome solve(const LinearProgram& lp, const SimplexOptions& opt) {
  check_well_formed(lp);
  if (lp.sense == Sense::Maximize) return solve_max(lp.objective, lp.rows, lp.n_vars, opt);
  std::vector<double> neg = lp.objective;
  for (double& c : neg) c = -c;
  LpOutcome out = solve_max(neg, lp.rows, lp.n_vars, opt);
  if (out.status == LpStatus::Optimal) out.value = -out.value;
  return out;
}

LpOutcome enumerate_vertices(const LinearProgram& lp) {
  check_well_formed(lp);
  if (lp.n_vars > kVertexEnumerationLimit)
    throw std::invalid_argument("TooLarge: vertex enumeration is limited to " +
                                std::to_string(kVertexEnumerationLimit) + " variables");

  const auto vertices = basic_feasible_points(lp.rows, lp.n_vars);
  LpOutcome out;
  if (vertices.empty()) {
    out.status = LpStatus::Infeasible;
    return out;
  }

  double c_scale = 1.0;
  for (double c : lp.objective) c_scale = std::max(c_scale, std::abs(c));
  const double sign = (lp.sense == Sense::Maximize) ? 1.0 : -1.0;
  for (const auto& dir : recession_directions(lp.rows, lp.n_vars)) {
    if (sign * dot(lp.objective, dir) > 1e-9 * c_scale) {
      out.status = LpStatus::Unbounded;
      return out;
    }
  }

  const std::vector<double>* best = &vertices.front();
  double best_v = dot(lp.objective, *best);
  for (const auto& p : vertices) {
    const double v = dot(lp.objective, p);
    if (sign * v > sign * best_v) {
      best_v = v;
      best = &p;
    }
  }
  out.status = LpStatus::Optimal;
  out.x = *best;
  out.value = best_v;
  return out;
}

std::vector<std::vector<double>> feasible_vertices(const LinearProgram& lp) {
  check_well_formed(lp);
  if (lp.n_vars > kVertexEnumerationLimit)
    throw std::invalid_argument("TooLarge: vertex enumeration is limited to " +
                                std::to_string(kVertexEnumerationLimit) + " variables");
  return basic_feasible_points(lp.rows, lp.n_vars);
}

}  // namespace fmolp::lp
