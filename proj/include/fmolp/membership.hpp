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

#ifndef FMOLP_MEMBERSHIP_HPP_
#define FMOLP_MEMBERSHIP_HPP_

#include <vector>

#include "fmolp/lp.hpp"
#include "fmolp/model.hpp"

namespace fmolp::membership {

// A linear membership ramp, always clamped to [0,1]. Three shapes:
//   ObjectiveRange — ramps between an objective's individual worst (mu=0)
//                    and best (mu=1) values; mirrored for minimization.
//   ObjectiveGoal  — mu=1 at the aspiration level z0, 0 at z0 -/+ tolerance.
//   ConstraintSoft — mu=1 while the row holds at its rhs, decaying to 0 once
//                    the tolerance is fully consumed.
struct MembershipSpec {
  enum class Kind { ObjectiveRange, ObjectiveGoal, ConstraintSoft };

  Kind kind = Kind::ObjectiveRange;
  lp::Sense sense = lp::Sense::Maximize;      // objective shapes only
  double z_worst = 0.0, z_best = 0.0;         // ObjectiveRange
  double goal = 0.0, goal_tolerance = 0.0;    // ObjectiveGoal
  double rhs = 0.0, rhs_tolerance = 0.0;      // ConstraintSoft
  model::FuzzyRelation relation = model::FuzzyRelation::LessEqSoft;

  // Factories validate the shape; invalid specs throw std::invalid_argument.
  static MembershipSpec objective_range(double z_worst, double z_best, lp::Sense sense);
  static MembershipSpec objective_goal(double goal, double tolerance, lp::Sense sense);
  static MembershipSpec constraint_soft(double rhs, double tolerance, model::FuzzyRelation rel);

  double ramp_width() const;
};

// Membership of a value (the objective value z, or the row expression a.x).
double eval(const MembershipSpec& spec, double value);

// Rows over (x..., alpha) equivalent to mu(expr(x)) >= alpha, with alpha's
// coefficient placed at column alpha_var_index. Works for any variable in
// alpha's slot, which is how membership variables get their defining rows.
std::vector<lp::LpRow> as_lp_rows(const MembershipSpec& spec, const std::vector<double>& coeffs,
                                  int alpha_var_index);

inline double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

}  // namespace fmolp::membership

#endif  // FMOLP_MEMBERSHIP_HPP_
