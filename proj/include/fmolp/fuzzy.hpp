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

#ifndef FMOLP_FUZZY_HPP_
#define FMOLP_FUZZY_HPP_

#include <vector>

#include "fmolp/crisp.hpp"
#include "fmolp/model.hpp"
#include "fmolp/status.hpp"

namespace fmolp::fuzzy {

struct FuzzySolution {
  std::vector<double> x;
  std::vector<double> z;
  std::vector<double> mu_obj;      // per objective
  std::vector<double> mu_con;      // per constraint; 1 for rows without membership
  std::vector<double> phi;         // z_i / fuzzy z_i+
  std::vector<double> slack_used;  // per constraint: fraction of tolerance consumed
  double alpha = 0.0;              // min over all memberships at x
  int lp_solves = 0;
  int simplex_iterations = 0;
};

// Crisp snapshot of the fuzzy region at relaxation level theta: every soft
// rhs moves to b + theta*d (<=~) or b - theta*d (>=~) and the relation
// hardens. theta=0 is the crisp core, theta=1 the full support.
model::DecisionProblem relax(const model::DecisionProblem& problem, double theta);

// Individual bests over the relaxed region (cfg.fuzzy_best_theta), worsts per
// policy over the crisp region (cfg.fuzzy_worst_theta).
Result<std::vector<crisp::ObjectiveRange>> fuzzy_individual_optima(
    const model::DecisionProblem& problem, const model::SolverConfig& cfg);

// Joint augmented formulation: goal-form membership rows for objectives that
// carry (goal, tolerance), range form over the fuzzy optima otherwise; soft
// constraint membership rows; objective alpha + delta * weighted membership
// sum with memberships clamped to [0,1] through bounded auxiliary variables.
Result<FuzzySolution> solve_fuzzy_augmented(const model::DecisionProblem& problem,
                                            const model::SolverConfig& cfg);

// Same, but soft constraint tolerances are ignored (crisp rows) and every
// objective must carry a goal. The pure goal-programming reading.
Result<FuzzySolution> solve_goal_form(const model::DecisionProblem& problem,
                                      const model::SolverConfig& cfg);

struct SweepRow {
  double alpha = 0.0;
  bool feasible = false;
  std::vector<double> x, z, phi;
};

struct SweepTable {
  std::vector<SweepRow> rows;
};

// For each grid level fixes alpha and maximizes the delta-weighted membership
// sum subject to every membership row holding at that level. Grid must be
// ascending within [0,1] and nonempty.
Result<SweepTable> alpha_sweep(const model::DecisionProblem& problem,
                               const model::SolverConfig& cfg, const std::vector<double>& grid);

}  // namespace fmolp::fuzzy

#endif  // FMOLP_FUZZY_HPP_
