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

// Instance generators and brute-force oracles shared by the unit suites and
// the acceptance harness. Everything here is deliberately independent of the
// solver paths it checks: memberships are evaluated from their definitions
// and optima come from vertex enumeration or grid search.

#ifndef FMOLP_TESTS_TEST_UTIL_HPP_
#define FMOLP_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "fmolp/crisp.hpp"
#include "fmolp/lp.hpp"
#include "fmolp/model.hpp"

namespace fmolp::testutil {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline int rand_int(std::mt19937_64& g, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(g);
}

// Random dense LP with integer data: n <= 6, m <= 8, coefficients in [-9,9].
// Statuses come out mixed (optimal, infeasible, unbounded).
inline lp::LinearProgram random_lp(std::uint64_t seed) {
  auto g = rng(seed);
  lp::LinearProgram p;
  p.n_vars = rand_int(g, 1, 6);
  p.sense = rand_int(g, 0, 1) ? lp::Sense::Maximize : lp::Sense::Minimize;
  p.objective.resize(p.n_vars);
  for (double& c : p.objective) c = rand_int(g, -9, 9);
  const int m = rand_int(g, 1, 8);
  for (int i = 0; i < m; ++i) {
    lp::LpRow row;
    row.coeffs.resize(p.n_vars);
    for (double& a : row.coeffs) a = rand_int(g, -9, 9);
    const int rel = rand_int(g, 0, 9);
    if (rel < 6) {
      row.rel = lp::Relation::LessEq;
      row.rhs = rand_int(g, -2, 9);  // biased feasible, some empty regions
    } else if (rel < 9) {
      row.rel = lp::Relation::GreaterEq;
      row.rhs = rand_int(g, -9, 4);
    } else {
      row.rel = lp::Relation::Equal;
      row.rhs = rand_int(g, -2, 4);
    }
    p.rows.push_back(std::move(row));
  }
  return p;
}

// Random bounded 2-variable multi-objective instance. The origin is feasible
// and box rows keep the region bounded, so individual optima always exist.
inline model::DecisionProblem random_2var_mo(std::uint64_t seed) {
  auto g = rng(seed);
  model::DecisionProblem p;
  p.n_vars = 2;
  p.variable_names = {"x1", "x2"};
  const int k = rand_int(g, 2, 4);
  for (int i = 0; i < k; ++i) {
    model::Objective o;
    o.name = "z" + std::to_string(i + 1);
    o.coefficients = {double(rand_int(g, -6, 6)), double(rand_int(g, -6, 6))};
    if (o.coefficients[0] == 0.0 && o.coefficients[1] == 0.0) o.coefficients[0] = 1.0;
    p.objectives.push_back(std::move(o));
  }
  p.constraints.push_back({"box1", {1.0, 0.0}, model::FuzzyRelation::LessEq,
                           double(rand_int(g, 4, 12)), 0.0, {}});
  p.constraints.push_back({"box2", {0.0, 1.0}, model::FuzzyRelation::LessEq,
                           double(rand_int(g, 4, 12)), 0.0, {}});
  const int extra = rand_int(g, 1, 3);
  for (int i = 0; i < extra; ++i) {
    model::FuzzyConstraint c;
    c.name = "row" + std::to_string(i + 1);
    c.coefficients = {double(rand_int(g, -3, 6)), double(rand_int(g, -3, 6))};
    c.relation = model::FuzzyRelation::LessEq;
    c.rhs = rand_int(g, 2, 20);
    p.constraints.push_back(std::move(c));
  }
  return p;
}

// Random bounded fuzzy problem with goal-form objectives and soft rows; used
// for the relaxation-monotonicity property.
inline model::DecisionProblem random_fuzzy_goal_problem(std::uint64_t seed) {
  auto g = rng(seed);
  model::DecisionProblem p;
  p.n_vars = 2;
  p.variable_names = {"x1", "x2"};
  const double cap = rand_int(g, 8, 14);
  const int k = rand_int(g, 1, 3);
  for (int i = 0; i < k; ++i) {
    model::Objective o;
    o.name = "z" + std::to_string(i + 1);
    o.coefficients = {double(rand_int(g, 1, 6)), double(rand_int(g, 1, 6))};
    // Reachable optimum over {x1+x2 <= cap, 0 <= x <= 10}; goals sit inside it
    // so that halving the tolerances keeps the instance feasible.
    const double hi = std::max(o.coefficients[0], o.coefficients[1]);
    const double lo = std::min(o.coefficients[0], o.coefficients[1]);
    const double reach = hi * std::min(10.0, cap) + lo * std::max(0.0, cap - 10.0);
    o.goal = reach * (0.55 + 0.03 * rand_int(g, 0, 10));
    o.tolerance = reach * (0.2 + 0.02 * rand_int(g, 0, 10));
    p.objectives.push_back(std::move(o));
  }
  p.constraints.push_back({"cap", {1.0, 1.0}, model::FuzzyRelation::LessEqSoft, cap,
                           double(rand_int(g, 1, 5)), {}});
  p.constraints.push_back({"box1", {1.0, 0.0}, model::FuzzyRelation::LessEq, 10.0, 0.0, {}});
  p.constraints.push_back({"box2", {0.0, 1.0}, model::FuzzyRelation::LessEq, 10.0, 0.0, {}});
  if (rand_int(g, 0, 1))
    p.constraints.push_back({"floor", {1.0, 0.0}, model::FuzzyRelation::GreaterEqSoft,
                             double(rand_int(g, 1, 4)), double(rand_int(g, 1, 3)), {}});
  return p;
}

// --- brute-force max-min oracle for 2-variable instances -------------------

struct LinearMembership {
  // mu_expr(x) = g . x + o before clamping to [0,1]
  std::vector<double> g;
  double o = 0.0;
  double value(const std::vector<double>& x) const {
    const double v = lp::dot(g, x) + o;
    return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
  }
};

// max over the crisp feasible region of the minimum objective membership,
// with ranges taken from vertex enumeration (ComputedMin semantics). Exact up
// to floating point: the candidates cover every kink of the piecewise-linear
// surface; a zooming grid is kept as a backstop.
inline double oracle_maxmin_2var(const model::DecisionProblem& p) {
  const auto rows = crisp::crisp_rows(p);
  lp::LinearProgram region{2, lp::Sense::Maximize, {0.0, 0.0}, rows};
  const auto verts = lp::feasible_vertices(region);
  if (verts.empty()) return -1.0;  // infeasible; callers treat separately

  std::vector<LinearMembership> mus;
  for (const auto& obj : p.objectives) {
    double zb = lp::dot(obj.coefficients, verts[0]);
    double zw = zb;
    for (const auto& v : verts) {
      const double z = lp::dot(obj.coefficients, v);
      zb = obj.sense == lp::Sense::Maximize ? std::max(zb, z) : std::min(zb, z);
      zw = obj.sense == lp::Sense::Maximize ? std::min(zw, z) : std::max(zw, z);
    }
    if (std::abs(zb - zw) <= 1e-12 * (1.0 + std::abs(zb))) continue;  // degenerate, mu = 1
    LinearMembership m;
    const double width = std::abs(zb - zw);
    const double sign = obj.sense == lp::Sense::Maximize ? 1.0 : -1.0;
    m.g = {sign * obj.coefficients[0] / width, sign * obj.coefficients[1] / width};
    m.o = obj.sense == lp::Sense::Maximize ? -zw / width : zw / width;
    mus.push_back(std::move(m));
  }

  auto feasible = [&rows](const std::vector<double>& x) {
    if (x[0] < -1e-9 || x[1] < -1e-9) return false;
    for (const auto& r : rows)
      if (lp::row_violation(r, x) > 1e-7 * (1.0 + std::abs(r.rhs))) return false;
    return true;
  };
  auto f = [&mus](const std::vector<double>& x) {
    double m = 1.0;
    for (const auto& mu : mus) m = std::min(m, mu.value(x));
    return m;
  };

  // Candidate lines: constraint boundaries, axes, membership kinks (mu = 0,
  // mu = 1) and pairwise membership-equality lines.
  struct Line {
    double a1, a2, b;  // a1 x1 + a2 x2 = b
  };
  std::vector<Line> lines;
  for (const auto& r : rows) lines.push_back({r.coeffs[0], r.coeffs[1], r.rhs});
  lines.push_back({1.0, 0.0, 0.0});
  lines.push_back({0.0, 1.0, 0.0});
  for (const auto& m : mus) {
    lines.push_back({m.g[0], m.g[1], -m.o});
    lines.push_back({m.g[0], m.g[1], 1.0 - m.o});
  }
  for (std::size_t i = 0; i < mus.size(); ++i)
    for (std::size_t j = i + 1; j < mus.size(); ++j)
      lines.push_back({mus[i].g[0] - mus[j].g[0], mus[i].g[1] - mus[j].g[1],
                       mus[j].o - mus[i].o});

  double best = -1.0;
  for (const auto& v : verts)
    if (feasible(v)) best = std::max(best, f(v));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const double det = lines[i].a1 * lines[j].a2 - lines[i].a2 * lines[j].a1;
      if (std::abs(det) < 1e-12) continue;
      const std::vector<double> x = {
          (lines[i].b * lines[j].a2 - lines[j].b * lines[i].a2) / det,
          (lines[i].a1 * lines[j].b - lines[j].a1 * lines[i].b) / det};
      if (feasible(x)) best = std::max(best, f(x));
    }
  }

  // Grid backstop with three zoom rounds.
  double lo1 = verts[0][0], hi1 = lo1, lo2 = verts[0][1], hi2 = lo2;
  for (const auto& v : verts) {
    lo1 = std::min(lo1, v[0]);
    hi1 = std::max(hi1, v[0]);
    lo2 = std::min(lo2, v[1]);
    hi2 = std::max(hi2, v[1]);
  }
  double cx = 0.5 * (lo1 + hi1), cy = 0.5 * (lo2 + hi2);
  double span1 = std::max(hi1 - lo1, 1e-6), span2 = std::max(hi2 - lo2, 1e-6);
  for (int round = 0; round < 3; ++round) {
    const int steps = 100;
    double bx = cx, by = cy;
    for (int i = 0; i <= steps; ++i) {
      for (int j = 0; j <= steps; ++j) {
        const std::vector<double> x = {cx - span1 / 2 + span1 * i / steps,
                                       cy - span2 / 2 + span2 * j / steps};
        if (!feasible(x)) continue;
        const double v = f(x);
        if (v > best) {
          best = v;
          bx = x[0];
          by = x[1];
        }
      }
    }
    cx = bx;
    cy = by;
    span1 *= 0.1;
    span2 *= 0.1;
  }
  return best;
}

// Generic zooming grid maximizer over a 2-D box.
inline double grid_maximize(const std::function<bool(double, double)>& feasible,
                            const std::function<double(double, double)>& value, double lo1,
                            double hi1, double lo2, double hi2, int steps = 200, int rounds = 3) {
  double best = -std::numeric_limits<double>::infinity();
  double cx = 0.5 * (lo1 + hi1), cy = 0.5 * (lo2 + hi2);
  double span1 = hi1 - lo1, span2 = hi2 - lo2;
  for (int round = 0; round < rounds; ++round) {
    double bx = cx, by = cy;
    for (int i = 0; i <= steps; ++i) {
      for (int j = 0; j <= steps; ++j) {
        const double x = cx - span1 / 2 + span1 * i / steps;
        const double y = cy - span2 / 2 + span2 * j / steps;
        if (x < lo1 - 1e-12 || x > hi1 + 1e-12 || y < lo2 - 1e-12 || y > hi2 + 1e-12) continue;
        if (!feasible(x, y)) continue;
        const double v = value(x, y);
        if (v > best) {
          best = v;
          bx = x;
          by = y;
        }
      }
    }
    cx = bx;
    cy = by;
    span1 *= 0.1;
    span2 *= 0.1;
  }
  return best;
}

}  // namespace fmolp::testutil

#endif  // FMOLP_TESTS_TEST_UTIL_HPP_
