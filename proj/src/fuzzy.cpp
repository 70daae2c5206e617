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

#include "fmolp/fuzzy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fmolp/membership.hpp"

namespace fmolp::fuzzy {

using crisp::ObjectiveRange;
using lp::LinearProgram;
using lp::LpOutcome;
using lp::LpRow;
using lp::LpStatus;
using lp::Relation;
using lp::Sense;
using membership::MembershipSpec;
using model::DecisionProblem;
using model::FuzzyRelation;
using model::SolverConfig;

namespace {

struct Stats {
  int lp_solves = 0;
  int simplex_iterations = 0;
  void absorb(const LpOutcome& o) {
    ++lp_solves;
    simplex_iterations += o.iterations;
  }
};

Sense anti(Sense s) { return s == Sense::Maximize ? Sense::Minimize : Sense::Maximize; }

Result<std::vector<ObjectiveRange>> optima(const DecisionProblem& p, const SolverConfig& cfg,
                                           Stats* stats) {
  using R = Result<std::vector<ObjectiveRange>>;
  const std::vector<LpRow> best_rows = crisp::crisp_rows(relax(p, cfg.fuzzy_best_theta));
  const std::vector<LpRow> worst_rows = crisp::crisp_rows(relax(p, cfg.fuzzy_worst_theta));

  std::vector<ObjectiveRange> ranges;
  for (std::size_t i = 0; i < p.objectives.size(); ++i) {
    const model::Objective& obj = p.objectives[i];
    const LpOutcome best =
        lp::solve({p.n_vars, obj.sense, obj.coefficients, best_rows}, cfg.simplex());
    if (stats) stats->absorb(best);
    if (best.status == LpStatus::Infeasible)
      return R::failure(Status::InfeasibleProblem, "relaxed constraint set is empty");
    if (best.status == LpStatus::Unbounded)
      return R::failure(Status::UnboundedObjective,
                        "objective '" + obj.name + "' is unbounded over the relaxed set");
    ObjectiveRange r;
    r.z_plus = best.value;
    r.argmax_x = best.x;
    switch (cfg.worst_value_policy) {
      case model::WorstValuePolicy::Zero:
        r.z_minus = 0.0;
        break;
      case model::WorstValuePolicy::UserSupplied:
        r.z_minus = cfg.user_worst_values.at(i);
        break;
      case model::WorstValuePolicy::ComputedMin: {
        const LpOutcome worst =
            lp::solve({p.n_vars, anti(obj.sense), obj.coefficients, worst_rows}, cfg.simplex());
        if (stats) stats->absorb(worst);
        if (worst.status == LpStatus::Infeasible)
          return R::failure(Status::InfeasibleProblem, "crisp constraint set is empty");
        if (worst.status == LpStatus::Unbounded)
          return R::failure(Status::UnboundedObjective,
                            "objective '" + obj.name + "' has an unbounded worst value");
        r.z_minus = worst.value;
        r.argmin_x = worst.x;
        break;
      }
    }
    ranges.push_back(std::move(r));
  }
  return R::success(std::move(ranges));
}

bool goal_form(const model::Objective& o) { return o.goal.has_value() && o.tolerance.has_value(); }

struct Formulation {
  std::vector<std::optional<MembershipSpec>> obj_specs;  // nullopt = mu fixed at 1
  std::vector<std::optional<MembershipSpec>> con_specs;  // nullopt = no membership
  std::vector<LpRow> hard_rows;                          // soft d=0 hardened at rhs
};

// Membership shapes for the joint problem. use_goals=false ignores goals and
// constraint tolerances entirely (pure crisp reading is not built here).
Result<Formulation> formulate(const DecisionProblem& p,
                              const std::vector<ObjectiveRange>& ranges, bool soft_constraints) {
  using R = Result<Formulation>;
  Formulation f;
  f.obj_specs.resize(p.objectives.size());
  f.con_specs.resize(p.constraints.size());

  int informative = 0;
  for (std::size_t i = 0; i < p.objectives.size(); ++i) {
    const model::Objective& o = p.objectives[i];
    if (goal_form(o)) {
      f.obj_specs[i] = MembershipSpec::objective_goal(*o.goal, *o.tolerance, o.sense);
      ++informative;
      continue;
    }
    if (ranges[i].degenerate()) continue;
    const bool oriented = o.sense == Sense::Maximize ? ranges[i].z_plus > ranges[i].z_minus
                                                     : ranges[i].z_plus < ranges[i].z_minus;
    if (!oriented)
      return R::failure(Status::DegenerateRamp,
                        "objective '" + o.name + "': worst value lies beyond the best value");
    f.obj_specs[i] =
        MembershipSpec::objective_range(ranges[i].z_minus, ranges[i].z_plus, o.sense);
    ++informative;
  }

  for (std::size_t j = 0; j < p.constraints.size(); ++j) {
    const model::FuzzyConstraint& c = p.constraints[j];
    if (soft_constraints && model::is_soft(c.relation) && c.tolerance > 0.0) {
      f.con_specs[j] = MembershipSpec::constraint_soft(c.rhs, c.tolerance, c.relation);
      ++informative;
    } else {
      Relation rel = Relation::Equal;
      switch (c.relation) {
        case FuzzyRelation::LessEq:
        case FuzzyRelation::LessEqSoft: rel = Relation::LessEq; break;
        case FuzzyRelation::GreaterEq:
        case FuzzyRelation::GreaterEqSoft: rel = Relation::GreaterEq; break;
        case FuzzyRelation::Equal: rel = Relation::Equal; break;
      }
      f.hard_rows.push_back({c.coefficients, rel, c.rhs});
    }
  }

  if (informative == 0)
    return R::failure(Status::DegenerateRamp, "no informative membership remains");
  return R::success(std::move(f));
}

LpRow widen(LpRow row, int width) {
  row.coeffs.resize(width, 0.0);
  return row;
}

LpRow pin_alpha(LpRow row, int alpha_col, double alpha, int keep_width) {
  const double a = row.coeffs[alpha_col];
  row.coeffs.resize(alpha_col);
  row.rhs -= a * alpha;
  row.coeffs.resize(keep_width, 0.0);
  return row;
}

FuzzySolution extract(const DecisionProblem& p, const Formulation& f,
                      const std::vector<ObjectiveRange>& ranges, const std::vector<double>& full_x,
                      const Stats& stats) {
  FuzzySolution s;
  s.x.assign(full_x.begin(), full_x.begin() + p.n_vars);
  s.z.resize(p.objectives.size());
  s.mu_obj.resize(p.objectives.size());
  s.phi.resize(p.objectives.size());
  double alpha = 1.0;
  for (std::size_t i = 0; i < p.objectives.size(); ++i) {
    s.z[i] = lp::dot(p.objectives[i].coefficients, s.x);
    s.mu_obj[i] = f.obj_specs[i] ? membership::eval(*f.obj_specs[i], s.z[i]) : 1.0;
    alpha = std::min(alpha, s.mu_obj[i]);
    s.phi[i] = ranges[i].z_plus == 0.0 ? std::numeric_limits<double>::quiet_NaN()
                                       : s.z[i] / ranges[i].z_plus;
  }
  s.mu_con.assign(p.constraints.size(), 1.0);
  s.slack_used.assign(p.constraints.size(), 0.0);
  for (std::size_t j = 0; j < p.constraints.size(); ++j) {
    if (!f.con_specs[j]) continue;
    const model::FuzzyConstraint& c = p.constraints[j];
    const double g = lp::dot(c.coefficients, s.x);
    s.mu_con[j] = membership::eval(*f.con_specs[j], g);
    alpha = std::min(alpha, s.mu_con[j]);
    const double over = c.relation == FuzzyRelation::LessEqSoft ? g - c.rhs : c.rhs - g;
    s.slack_used[j] = membership::clamp01(over / c.tolerance);
  }
  s.alpha = alpha;
  s.lp_solves = stats.lp_solves;
  s.simplex_iterations = stats.simplex_iterations;
  return s;
}

// Joint augmented LP: variables x, alpha, then one bounded membership
// variable per membership so the delta term sees clamped values.
Result<FuzzySolution> solve_formulated(const DecisionProblem& p, const SolverConfig& cfg,
                                       const Formulation& f,
                                       const std::vector<ObjectiveRange>& ranges,
                                       const model::Weights& weights, Stats stats) {
  using R = Result<FuzzySolution>;
  const int n = p.n_vars;
  const int alpha_col = n;
  int width = n + 1;
  std::vector<int> obj_mu_col(p.objectives.size(), -1);
  std::vector<int> con_mu_col(p.constraints.size(), -1);
  for (std::size_t i = 0; i < p.objectives.size(); ++i)
    if (f.obj_specs[i]) obj_mu_col[i] = width++;
  for (std::size_t j = 0; j < p.constraints.size(); ++j)
    if (f.con_specs[j]) con_mu_col[j] = width++;

  LinearProgram aux;
  aux.n_vars = width;
  aux.sense = Sense::Maximize;
  aux.objective.assign(width, 0.0);
  aux.objective[alpha_col] = 1.0;

  for (const LpRow& r : f.hard_rows) aux.rows.push_back(widen(r, width));

  auto add_membership = [&](const MembershipSpec& spec, const std::vector<double>& coeffs,
                            int mu_col, double weight) {
    for (LpRow& r : membership::as_lp_rows(spec, coeffs, alpha_col))
      aux.rows.push_back(widen(std::move(r), width));
    for (LpRow& r : membership::as_lp_rows(spec, coeffs, mu_col))
      aux.rows.push_back(widen(std::move(r), width));
    LpRow cap;
    cap.coeffs.assign(width, 0.0);
    cap.coeffs[mu_col] = 1.0;
    cap.rel = Relation::LessEq;
    cap.rhs = 1.0;
    aux.rows.push_back(std::move(cap));
    aux.objective[mu_col] = cfg.delta * weight;
  };

  for (std::size_t i = 0; i < p.objectives.size(); ++i)
    if (f.obj_specs[i])
      add_membership(*f.obj_specs[i], p.objectives[i].coefficients, obj_mu_col[i],
                     weights.objective[i]);
  for (std::size_t j = 0; j < p.constraints.size(); ++j)
    if (f.con_specs[j])
      add_membership(*f.con_specs[j], p.constraints[j].coefficients, con_mu_col[j],
                     weights.constraint[j]);

  LpRow upper;
  upper.coeffs.assign(width, 0.0);
  upper.coeffs[alpha_col] = 1.0;
  upper.rel = Relation::LessEq;
  upper.rhs = cfg.alpha_upper;
  aux.rows.push_back(std::move(upper));
  if (cfg.alpha_lower > 0.0) {
    LpRow lower;
    lower.coeffs.assign(width, 0.0);
    lower.coeffs[alpha_col] = 1.0;
    lower.rel = Relation::GreaterEq;
    lower.rhs = cfg.alpha_lower;
    aux.rows.push_back(std::move(lower));
  }

  const LpOutcome out = lp::solve(aux, cfg.simplex());
  stats.absorb(out);
  if (out.status != LpStatus::Optimal)
    return R::failure(Status::InfeasibleAtAlphaLower,
                      "no point reaches the required acceptability level (alpha_lower = " +
                          std::to_string(cfg.alpha_lower) + ")");
  return R::success(extract(p, f, ranges, out.x, stats));
}

}  // namespace

DecisionProblem relax(const DecisionProblem& p, double theta) {
  if (!(theta >= 0.0 && theta <= 1.0))
    throw std::invalid_argument("relax: theta must lie in [0,1]");
  DecisionProblem out = p;
  for (model::FuzzyConstraint& c : out.constraints) {
    if (!model::is_soft(c.relation)) continue;
    if (c.relation == FuzzyRelation::LessEqSoft) {
      c.rhs += theta * c.tolerance;
      c.relation = FuzzyRelation::LessEq;
    } else {
      c.rhs -= theta * c.tolerance;
      c.relation = FuzzyRelation::GreaterEq;
    }
    c.tolerance = 0.0;
  }
  return out;
}

Result<std::vector<ObjectiveRange>> fuzzy_individual_optima(const DecisionProblem& p,
                                                            const SolverConfig& cfg) {
  return optima(p, cfg, nullptr);
}

Result<FuzzySolution> solve_fuzzy_augmented(const DecisionProblem& p, const SolverConfig& cfg) {
  using R = Result<FuzzySolution>;
  if (!p.has_fuzzy_content())
    return R::failure(Status::NoFuzzyContent,
                      "every relation is hard and no objective carries a goal; use the crisp "
                      "solver instead");
  Stats stats;
  auto ranges = optima(p, cfg, &stats);
  if (!ranges) return R::failure(ranges.status, ranges.message);
  auto form = formulate(p, *ranges, /*soft_constraints=*/true);
  if (!form) return R::failure(form.status, form.message);
  auto weights = model::normalize_weights(p, cfg, model::WeightMode::Joint);
  if (!weights) return R::failure(weights.status, weights.message);
  return solve_formulated(p, cfg, *form, *ranges, *weights, stats);
}

Result<FuzzySolution> solve_goal_form(const DecisionProblem& p, const SolverConfig& cfg) {
  using R = Result<FuzzySolution>;
  for (const model::Objective& o : p.objectives)
    if (!goal_form(o))
      return R::failure(Status::MissingGoal,
                        "objective '" + o.name + "' needs a goal and tolerance for goal mode");
  Stats stats;
  // Constraints are read crisply, so optima over the crisp rows.
  SolverConfig crisp_cfg = cfg;
  crisp_cfg.fuzzy_best_theta = 0.0;
  crisp_cfg.fuzzy_worst_theta = 0.0;
  auto ranges = optima(p, crisp_cfg, &stats);
  if (!ranges) return R::failure(ranges.status, ranges.message);
  auto form = formulate(p, *ranges, /*soft_constraints=*/false);
  if (!form) return R::failure(form.status, form.message);
  auto weights = model::normalize_weights(p, cfg, model::WeightMode::ObjectivesOnly);
  if (!weights) return R::failure(weights.status, weights.message);
  return solve_formulated(p, cfg, *form, *ranges, *weights, stats);
}

Result<SweepTable> alpha_sweep(const DecisionProblem& p, const SolverConfig& cfg,
                               const std::vector<double>& grid) {
  using R = Result<SweepTable>;
  if (grid.empty()) throw std::invalid_argument("EmptyGrid: alpha sweep needs at least one level");
  for (std::size_t g = 0; g < grid.size(); ++g) {
    if (grid[g] < 0.0 || grid[g] > 1.0)
      throw std::invalid_argument("EmptyGrid: sweep level outside [0,1]");
    if (g > 0 && grid[g] < grid[g - 1])
      throw std::invalid_argument("EmptyGrid: sweep grid must ascend");
  }

  Stats stats;
  auto ranges = optima(p, cfg, &stats);
  if (!ranges) return R::failure(ranges.status, ranges.message);
  auto form = formulate(p, *ranges, /*soft_constraints=*/true);
  if (!form) return R::failure(form.status, form.message);
  auto weights = model::normalize_weights(p, cfg);
  if (!weights) return R::failure(weights.status, weights.message);

  const int n = p.n_vars;
  SweepTable table;
  for (double level : grid) {
    int width = n;
    std::vector<int> obj_mu_col(p.objectives.size(), -1);
    std::vector<int> con_mu_col(p.constraints.size(), -1);
    for (std::size_t i = 0; i < p.objectives.size(); ++i)
      if (form->obj_specs[i]) obj_mu_col[i] = width++;
    for (std::size_t j = 0; j < p.constraints.size(); ++j)
      if (form->con_specs[j]) con_mu_col[j] = width++;

    LinearProgram aux;
    aux.n_vars = width;
    aux.sense = Sense::Maximize;
    aux.objective.assign(width, 0.0);
    for (const LpRow& r : form->hard_rows) aux.rows.push_back(widen(r, width));

    auto add_membership = [&](const MembershipSpec& spec, const std::vector<double>& coeffs,
                              int mu_col, double weight) {
      for (LpRow& r : membership::as_lp_rows(spec, coeffs, n))
        aux.rows.push_back(pin_alpha(std::move(r), n, level, width));
      for (LpRow& r : membership::as_lp_rows(spec, coeffs, mu_col))
        aux.rows.push_back(widen(std::move(r), width));
      LpRow cap;
      cap.coeffs.assign(width, 0.0);
      cap.coeffs[mu_col] = 1.0;
      cap.rel = Relation::LessEq;
      cap.rhs = 1.0;
      aux.rows.push_back(std::move(cap));
      aux.objective[mu_col] = cfg.delta * weight;
    };
    for (std::size_t i = 0; i < p.objectives.size(); ++i)
      if (form->obj_specs[i])
        add_membership(*form->obj_specs[i], p.objectives[i].coefficients, obj_mu_col[i],
                       weights->objective[i]);
    for (std::size_t j = 0; j < p.constraints.size(); ++j)
      if (form->con_specs[j])
        add_membership(*form->con_specs[j], p.constraints[j].coefficients, con_mu_col[j],
                       weights->constraint[j]);

    const LpOutcome out = lp::solve(aux, cfg.simplex());
    stats.absorb(out);
    SweepRow row;
    row.alpha = level;
    if (out.status == LpStatus::Optimal) {
      row.feasible = true;
      row.x.assign(out.x.begin(), out.x.begin() + n);
      row.z.resize(p.objectives.size());
      row.phi.resize(p.objectives.size());
      for (std::size_t i = 0; i < p.objectives.size(); ++i) {
        row.z[i] = lp::dot(p.objectives[i].coefficients, row.x);
        row.phi[i] = (*ranges)[i].z_plus == 0.0 ? std::numeric_limits<double>::quiet_NaN()
                                                : row.z[i] / (*ranges)[i].z_plus;
      }
    }
    table.rows.push_back(std::move(row));
  }
  return R::success(std::move(table));
}

}  // namespace fmolp::fuzzy
