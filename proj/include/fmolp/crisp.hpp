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

#ifndef FMOLP_CRISP_HPP_
#define FMOLP_CRISP_HPP_

#include <optional>
#include <vector>

#include "fmolp/lp.hpp"
#include "fmolp/membership.hpp"
#include "fmolp/model.hpp"
#include "fmolp/status.hpp"

namespace fmolp::crisp {

// Per-objective individual best/worst values over the crisp feasible set.
// z_plus is the optimum in the objective's own sense; z_minus follows the
// configured worst-value policy.
struct ObjectiveRange {
  double z_plus = 0.0;
  double z_minus = 0.0;
  std::vector<double> argmax_x;
  std::optional<std::vector<double>> argmin_x;

  bool degenerate() const;  // ramp carries no information
};

enum class CompromiseMode { MaxMin, TwoPhase, Augmented };
const char* to_string(CompromiseMode m);

struct CompromiseSolution {
  std::vector<double> x;
  std::vector<double> z;    // per-objective values at x
  std::vector<double> mu;   // per-objective memberships (1 for degenerate ramps)
  std::vector<double> phi;  // satisfaction z_i / z_i+ (NaN when z_i+ = 0)
  double alpha = 0.0;       // min membership at x
  CompromiseMode mode = CompromiseMode::MaxMin;
  int lp_solves = 0;
  int simplex_iterations = 0;
};

// The crisp reading of a problem's constraints: soft relations at their rhs,
// tolerances ignored.
std::vector<lp::LpRow> crisp_rows(const model::DecisionProblem& problem);

Result<std::vector<ObjectiveRange>> individual_optima(const model::DecisionProblem& problem,
                                                      const model::SolverConfig& cfg);

// max alpha subject to mu_i(x) >= alpha for every objective, the crisp rows,
// and alpha_lower <= alpha <= alpha_upper.
Result<CompromiseSolution> solve_maxmin(const model::DecisionProblem& problem,
                                        const model::SolverConfig& cfg);

// max alpha + delta * sum_i w_i mu_i(x) over the same feasible set; picks a
// nondominated point among max-min optima.
Result<CompromiseSolution> solve_augmented(const model::DecisionProblem& problem,
                                           const model::SolverConfig& cfg);

// Phase 1 maximizes alpha; phase 2 maximizes the mean membership subject to
// every membership staying >= the phase-1 level.
Result<CompromiseSolution> two_phase_refine(const model::DecisionProblem& problem,
                                            const model::SolverConfig& cfg);

// phi_i = z_i / z_i+, exactly.
Result<std::vector<double>> satisfaction(const std::vector<double>& z,
                                         const std::vector<ObjectiveRange>& ranges);

// Range-form membership specs from computed optima; degenerate ramps come
// back disengaged (nullopt) and contribute mu = 1.
Result<std::vector<std::optional<membership::MembershipSpec>>> range_memberships(
    const model::DecisionProblem& problem, const std::vector<ObjectiveRange>& ranges);

}  // namespace fmolp::crisp

#endif  // FMOLP_CRISP_HPP_
