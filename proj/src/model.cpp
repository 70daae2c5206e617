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

#include "fmolp/model.hpp"

#include <cmath>
#include <string>

namespace fmolp {

const char* to_string(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::InfeasibleProblem: return "infeasible_problem";
    case Status::UnboundedObjective: return "unbounded_objective";
    case Status::InfeasibleAtAlphaLower: return "infeasible_at_alpha_lower";
    case Status::DegenerateRamp: return "degenerate_ramp";
    case Status::NoFuzzyContent: return "no_fuzzy_content";
    case Status::AllZeroWeights: return "all_zero_weights";
    case Status::ZeroBestValue: return "zero_best_value";
    case Status::MissingGoal: return "missing_goal";
  }
  return "?";
}

}  // namespace fmolp

namespace fmolp::model {

bool is_soft(FuzzyRelation r) {
  return r == FuzzyRelation::LessEqSoft || r == FuzzyRelation::GreaterEqSoft;
}

const char* to_string(FuzzyRelation r) {
  switch (r) {
    case FuzzyRelation::LessEq: return "<=";
    case FuzzyRelation::LessEqSoft: return "<=~";
    case FuzzyRelation::GreaterEq: return ">=";
    case FuzzyRelation::GreaterEqSoft: return ">=~";
    case FuzzyRelation::Equal: return "=";
  }
  return "?";
}

const char* to_string(Sense s) { return s == Sense::Maximize ? "maximize" : "minimize"; }

const char* to_string(WorstValuePolicy p) {
  switch (p) {
    case WorstValuePolicy::Zero: return "zero";
    case WorstValuePolicy::ComputedMin: return "computed_min";
    case WorstValuePolicy::UserSupplied: return "user_supplied";
  }
  return "?";
}

const char* to_string(WeightPolicy p) {
  return p == WeightPolicy::EqualNormalized ? "equal_normalized" : "as_given";
}

bool DecisionProblem::has_fuzzy_content() const {
  for (const auto& c : constraints)
    if (is_soft(c.relation)) return true;
  for (const auto& o : objectives)
    if (o.goal && o.tolerance) return true;
  return false;
}

namespace {

bool all_finite(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace

ValidationReport validate(const DecisionProblem& p, const SolverConfig& cfg) {
  ValidationReport rep;
  auto issue = [&rep](std::string path, std::string msg) {
    rep.issues.push_back({std::move(path), std::move(msg)});
  };

  if (p.n_vars < 1) issue("n_vars", "must be >= 1");
  if (!p.variable_names.empty() && static_cast<int>(p.variable_names.size()) != p.n_vars)
    issue("variable_names", "dimension mismatch: expected " + std::to_string(p.n_vars) + " names");
  if (p.objectives.empty()) issue("objectives", "k >= 1 required");
  if (p.constraints.empty()) issue("constraints", "m >= 1 required");

  for (std::size_t i = 0; i < p.objectives.size(); ++i) {
    const Objective& o = p.objectives[i];
    const std::string base = "objectives[" + std::to_string(i) + "]";
    if (static_cast<int>(o.coefficients.size()) != p.n_vars)
      issue(base + ".coefficients", "dimension mismatch: expected " + std::to_string(p.n_vars));
    if (!all_finite(o.coefficients)) issue(base + ".coefficients", "non-finite coefficient");
    if (o.tolerance && !o.goal) issue(base + ".tolerance", "tolerance without goal");
    if (o.tolerance && *o.tolerance <= 0.0) issue(base + ".tolerance", "must be > 0");
    if (o.goal && !std::isfinite(*o.goal)) issue(base + ".goal", "non-finite value");
    if (o.weight && (*o.weight < 0.0 || !std::isfinite(*o.weight)))
      issue(base + ".weight", "must be >= 0 and finite");
  }

  for (std::size_t j = 0; j < p.constraints.size(); ++j) {
    const FuzzyConstraint& c = p.constraints[j];
    const std::string base = "constraints[" + std::to_string(j) + "]";
    if (static_cast<int>(c.coefficients.size()) != p.n_vars)
      issue(base + ".coefficients", "dimension mismatch: expected " + std::to_string(p.n_vars));
    if (!all_finite(c.coefficients)) issue(base + ".coefficients", "non-finite coefficient");
    if (!std::isfinite(c.rhs)) issue(base + ".rhs", "non-finite value");
    if (c.tolerance < 0.0 || !std::isfinite(c.tolerance)) issue(base + ".tolerance", "must be >= 0 and finite");
    if (c.weight && (*c.weight < 0.0 || !std::isfinite(*c.weight)))
      issue(base + ".weight", "must be >= 0 and finite");
  }

  if (!(cfg.delta > 0.0) || !std::isfinite(cfg.delta)) issue("config.delta", "must be > 0");
  if (cfg.alpha_lower < 0.0 || cfg.alpha_lower > 1.0) issue("config.alpha_lower", "must lie in [0,1]");
  if (cfg.alpha_upper < 0.0 || cfg.alpha_upper > 1.0) issue("config.alpha_upper", "must lie in [0,1]");
  if (cfg.alpha_lower > cfg.alpha_upper) issue("config.alpha_lower", "must be <= alpha_upper");
  if (!(cfg.eps_feas > 0.0)) issue("config.eps_feas", "must be > 0");
  if (!(cfg.eps_opt > 0.0)) issue("config.eps_opt", "must be > 0");
  if (cfg.fuzzy_best_theta < 0.0 || cfg.fuzzy_best_theta > 1.0)
    issue("config.fuzzy_best_theta", "must lie in [0,1]");
  if (cfg.fuzzy_worst_theta < 0.0 || cfg.fuzzy_worst_theta > 1.0)
    issue("config.fuzzy_worst_theta", "must lie in [0,1]");
  if (cfg.worst_value_policy == WorstValuePolicy::UserSupplied) {
    if (cfg.user_worst_values.size() != p.objectives.size())
      issue("config.user_worst_values", "one value per objective required");
    if (!all_finite(cfg.user_worst_values)) issue("config.user_worst_values", "non-finite value");
  }

  return rep;
}

Result<Weights> normalize_weights(const DecisionProblem& p, const SolverConfig& cfg,
                                  WeightMode mode) {
  Weights w;
  w.objective.assign(p.objectives.size(), 0.0);
  w.constraint.assign(p.constraints.size(), 0.0);

  std::vector<std::size_t> soft_rows;
  if (mode == WeightMode::Joint)
    for (std::size_t j = 0; j < p.constraints.size(); ++j)
      if (is_soft(p.constraints[j].relation) && p.constraints[j].tolerance > 0.0)
        soft_rows.push_back(j);

  const std::size_t participants = p.objectives.size() + soft_rows.size();
  if (participants == 0) return Result<Weights>::failure(Status::AllZeroWeights, "no memberships to weight");

  if (cfg.weight_policy == WeightPolicy::EqualNormalized) {
    const double share = 1.0 / static_cast<double>(participants);
    for (double& v : w.objective) v = share;
    for (std::size_t j : soft_rows) w.constraint[j] = share;
    return Result<Weights>::success(std::move(w));
  }

  // AsGiven: a missing weight counts as 1 before renormalization.
  double sum = 0.0;
  for (std::size_t i = 0; i < p.objectives.size(); ++i) {
    w.objective[i] = p.objectives[i].weight.value_or(1.0);
    sum += w.objective[i];
  }
  for (std::size_t j : soft_rows) {
    w.constraint[j] = p.constraints[j].weight.value_or(1.0);
    sum += w.constraint[j];
  }
  if (sum <= 0.0)
    return Result<Weights>::failure(Status::AllZeroWeights, "given weights sum to zero");
  for (double& v : w.objective) v /= sum;
  for (double& v : w.constraint) v /= sum;
  return Result<Weights>::success(std::move(w));
}

Result<Weights> normalize_weights(const DecisionProblem& p, const SolverConfig& cfg) {
  bool joint = false;
  for (const auto& c : p.constraints)
    if (is_soft(c.relation) && c.tolerance > 0.0) { joint = true; break; }
  return normalize_weights(p, cfg, joint ? WeightMode::Joint : WeightMode::ObjectivesOnly);
}

}  // namespace fmolp::model
