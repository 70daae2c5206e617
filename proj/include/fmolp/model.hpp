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

#ifndef FMOLP_MODEL_HPP_
#define FMOLP_MODEL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "fmolp/lp.hpp"
#include "fmolp/status.hpp"

namespace fmolp::model {

using lp::Sense;

// Relations a constraint row may carry. The soft forms (~) allow the rhs to
// be stretched by up to the row's tolerance, with membership decaying
// linearly from 1 at the rhs to 0 at rhs +/- tolerance.
enum class FuzzyRelation { LessEq, LessEqSoft, GreaterEq, GreaterEqSoft, Equal };

bool is_soft(FuzzyRelation r);
const char* to_string(FuzzyRelation r);
const char* to_string(Sense s);

struct Objective {
  std::string name;
  std::vector<double> coefficients;
  Sense sense = Sense::Maximize;
  std::optional<double> goal;       // aspiration level z0
  std::optional<double> tolerance;  // goal tolerance t > 0; requires goal
  std::optional<double> weight;     // relative importance, >= 0

  bool operator==(const Objective&) const = default;
};

struct FuzzyConstraint {
  std::string name;
  std::vector<double> coefficients;
  FuzzyRelation relation = FuzzyRelation::LessEq;
  double rhs = 0.0;
  double tolerance = 0.0;  // 0 keeps a soft relation crisp
  std::optional<double> weight;

  bool operator==(const FuzzyConstraint&) const = default;
};

struct DecisionProblem {
  int n_vars = 0;
  std::vector<std::string> variable_names;
  std::vector<Objective> objectives;
  std::vector<FuzzyConstraint> constraints;

  bool operator==(const DecisionProblem&) const = default;
  bool has_fuzzy_content() const;  // any soft relation or any goal-form objective
};

enum class WorstValuePolicy { Zero, ComputedMin, UserSupplied };
enum class WeightPolicy { EqualNormalized, AsGiven };

const char* to_string(WorstValuePolicy p);
const char* to_string(WeightPolicy p);

struct SolverConfig {
  double delta = 1e-4;      // tie-breaking weight of the membership sum
  double alpha_lower = 0.0;
  double alpha_upper = 1.0;
  WorstValuePolicy worst_value_policy = WorstValuePolicy::Zero;
  std::vector<double> user_worst_values;  // used iff UserSupplied, one per objective
  WeightPolicy weight_policy = WeightPolicy::EqualNormalized;
  double eps_feas = 1e-9;
  double eps_opt = 1e-9;
  // Relaxation levels used when computing fuzzy individual optima: best over
  // the support of the fuzzy region, worst over the crisp core by default.
  double fuzzy_best_theta = 1.0;
  double fuzzy_worst_theta = 0.0;

  lp::SimplexOptions simplex() const { return {eps_feas, eps_opt}; }
};

struct ValidationIssue {
  std::string path;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Checks every type invariant; violations come back with a path to the
// offending field. Never mutates or throws.
ValidationReport validate(const DecisionProblem& problem, const SolverConfig& cfg);

enum class WeightMode { ObjectivesOnly, Joint };

struct Weights {
  std::vector<double> objective;   // one per objective
  std::vector<double> constraint;  // one per constraint; 0 for rows without membership
};

// Nonnegative weights summing to 1 across the participating memberships.
// Joint mode includes soft constraints with tolerance > 0 in the pool.
Result<Weights> normalize_weights(const DecisionProblem& problem, const SolverConfig& cfg,
                                  WeightMode mode);

// Joint whenever constraint memberships participate, objectives-only otherwise.
Result<Weights> normalize_weights(const DecisionProblem& problem, const SolverConfig& cfg);

}  // namespace fmolp::model

#endif  // FMOLP_MODEL_HPP_
