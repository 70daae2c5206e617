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

#ifndef FMOLP_LP_HPP_
#define FMOLP_LP_HPP_

#include <vector>

namespace fmolp::lp {

enum class Sense { Maximize, Minimize };
enum class Relation { LessEq, GreaterEq, Equal };

struct LpRow {
  std::vector<double> coeffs;
  Relation rel = Relation::LessEq;
  double rhs = 0.0;
};

// Single-objective LP over x >= 0 (nonnegativity is implicit for every
// variable; bounds beyond that are ordinary rows).
struct LinearProgram {
  int n_vars = 0;
  Sense sense = Sense::Maximize;
  std::vector<double> objective;
  std::vector<LpRow> rows;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus s);

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;  // filled iff Optimal
  double value = 0.0;     // filled iff Optimal
  int iterations = 0;     // simplex pivots (0 for the enumeration oracle)
};

struct SimplexOptions {
  double eps_feas = 1e-9;  // feasibility tolerance
  double eps_opt = 1e-9;   // reduced-cost optimality tolerance
};

// Two-phase dense tableau simplex. Dantzig pricing, switching permanently to
// Bland's rule once the pivot count exceeds 2*(rows+cols) to rule out cycling.
// Deterministic: identical inputs give bit-identical outcomes.
// Throws std::invalid_argument on malformed input.
LpOutcome solve(const LinearProgram& lp, const SimplexOptions& opt = {});

// Brute-force oracle: visits every intersection of n_vars active hyperplanes
// drawn from the rows and the nonnegativity bounds, keeps the feasible ones,
// and returns the best. Unboundedness is detected by enumerating the extreme
// rays of the recession cone. Independent of solve() by construction.
inline constexpr int kVertexEnumerationLimit = 10;
LpOutcome enumerate_vertices(const LinearProgram& lp);

// All feasible basic points of the LP's constraint set, deduplicated.
// Same n_vars guard as enumerate_vertices.
std::vector<std::vector<double>> feasible_vertices(const LinearProgram& lp);

// Amount by which x violates the row (0 when satisfied).
double row_violation(const LpRow& row, const std::vector<double>& x);

double dot(const std::vector<double>& a, const std::vector<double>& x);

}  // namespace fmolp::lp

#endif  // FMOLP_LP_HPP_
