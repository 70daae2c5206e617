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

#include "fmolp/membership.hpp"

#include <cmath>
#include <stdexcept>

namespace fmolp::membership {

using lp::LpRow;
using lp::Relation;
using lp::Sense;
using model::FuzzyRelation;

MembershipSpec MembershipSpec::objective_range(double z_worst, double z_best, Sense sense) {
  if (!std::isfinite(z_worst) || !std::isfinite(z_best))
    throw std::invalid_argument("InvalidSpec: non-finite range endpoint");
  if (sense == Sense::Maximize ? !(z_best > z_worst) : !(z_best < z_worst))
    throw std::invalid_argument("InvalidSpec: objective range needs best strictly beyond worst");
  MembershipSpec s;
  s.kind = Kind::ObjectiveRange;
  s.sense = sense;
  s.z_worst = z_worst;
  s.z_best = z_best;
  return s;
}

MembershipSpec MembershipSpec::objective_goal(double goal, double tolerance, Sense sense) {
  if (!std::isfinite(goal) || !(tolerance > 0.0))
    throw std::invalid_argument("InvalidSpec: goal membership needs tolerance > 0");
  MembershipSpec s;
  s.kind = Kind::ObjectiveGoal;
  s.sense = sense;
  s.goal = goal;
  s.goal_tolerance = tolerance;
  return s;
}

MembershipSpec MembershipSpec::constraint_soft(double rhs, double tolerance, FuzzyRelation rel) {
  if (rel != FuzzyRelation::LessEqSoft && rel != FuzzyRelation::GreaterEqSoft)
    throw std::invalid_argument("InvalidSpec: soft membership needs a soft relation");
  if (!std::isfinite(rhs) || !(tolerance > 0.0))
    throw std::invalid_argument("InvalidSpec: soft membership needs tolerance > 0");
  MembershipSpec s;
  s.kind = Kind::ConstraintSoft;
  s.rhs = rhs;
  s.rhs_tolerance = tolerance;
  s.relation = rel;
  return s;
}

double MembershipSpec::ramp_width() const {
  switch (kind) {
    case Kind::ObjectiveRange: return std::abs(z_best - z_worst);
    case Kind::ObjectiveGoal: return goal_tolerance;
    case Kind::ConstraintSoft: return rhs_tolerance;
  }
  return 0.0;
}

double eval(const MembershipSpec& spec, double value) {
  switch (spec.kind) {
    case MembershipSpec::Kind::ObjectiveRange: {
      if (spec.sense == Sense::Maximize)
        return clamp01((value - spec.z_worst) / (spec.z_best - spec.z_worst));
      return clamp01((spec.z_worst - value) / (spec.z_worst - spec.z_best));
    }
    case MembershipSpec::Kind::ObjectiveGoal: {
      if (spec.sense == Sense::Maximize)
        return clamp01(1.0 - (spec.goal - value) / spec.goal_tolerance);
      return clamp01(1.0 - (value - spec.goal) / spec.goal_tolerance);
    }
    case MembershipSpec::Kind::ConstraintSoft: {
      if (spec.relation == FuzzyRelation::LessEqSoft)
        return clamp01(1.0 - (value - spec.rhs) / spec.rhs_tolerance);
      return clamp01(1.0 - (spec.rhs - value) / spec.rhs_tolerance);
    }
  }
  return 0.0;
}

std::vector<LpRow> as_lp_rows(const MembershipSpec& spec, const std::vector<double>& coeffs,
                              int alpha_var_index) {
  if (alpha_var_index < static_cast<int>(coeffs.size()))
    throw std::invalid_argument("InvalidSpec: alpha column collides with the expression variables");

  LpRow row;
  row.coeffs.assign(alpha_var_index + 1, 0.0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) row.coeffs[j] = coeffs[j];

  switch (spec.kind) {
    case MembershipSpec::Kind::ObjectiveRange: {
      if (spec.sense == Sense::Maximize) {
        // c.x - (z+ - z-) alpha >= z-
        row.coeffs[alpha_var_index] = -(spec.z_best - spec.z_worst);
        row.rel = Relation::GreaterEq;
        row.rhs = spec.z_worst;
      } else {
        // c.x + (z- - z+) alpha <= z-
        row.coeffs[alpha_var_index] = spec.z_worst - spec.z_best;
        row.rel = Relation::LessEq;
        row.rhs = spec.z_worst;
      }
      break;
    }
    case MembershipSpec::Kind::ObjectiveGoal: {
      if (spec.sense == Sense::Maximize) {
        // c.x - t alpha >= z0 - t
        row.coeffs[alpha_var_index] = -spec.goal_tolerance;
        row.rel = Relation::GreaterEq;
        row.rhs = spec.goal - spec.goal_tolerance;
      } else {
        // c.x + t alpha <= z0 + t
        row.coeffs[alpha_var_index] = spec.goal_tolerance;
        row.rel = Relation::LessEq;
        row.rhs = spec.goal + spec.goal_tolerance;
      }
      break;
    }
    case MembershipSpec::Kind::ConstraintSoft: {
      if (spec.relation == FuzzyRelation::LessEqSoft) {
        // a.x + d alpha <= b + d
        row.coeffs[alpha_var_index] = spec.rhs_tolerance;
        row.rel = Relation::LessEq;
        row.rhs = spec.rhs + spec.rhs_tolerance;
      } else {
        // a.x - d alpha >= b - d
        row.coeffs[alpha_var_index] = -spec.rhs_tolerance;
        row.rel = Relation::GreaterEq;
        row.rhs = spec.rhs - spec.rhs_tolerance;
      }
      break;
    }
  }
  return {row};
}

}  // namespace fmolp::membership
