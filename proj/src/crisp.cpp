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

#include "fmolp/crisp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fmolp::crisp {

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

Sense anti(Sense s) { return s == Sense::Maximize ? Sense::Minimize : Sense::Maximize; }

Relation harden(FuzzyRelation r) {
  switch (r) {
    case FuzzyRelation::LessEq:
    case FuzzyRelation::LessEqSoft: return Relation::LessEq;
    case FuzzyRelation::GreaterEq:
    case FuzzyRelation::GreaterEqSoft: return Relation::GreaterEq;
    case FuzzyRelation::Equal: return Relation::Equal;
  }
  return Relation::LessEq;
}

struct Stats {
  int lp_solves = 0;
  int simplex_iterations = 0;
  void absorb(const LpOutcome& o) {
    ++lp_solves;
    simplex_iterations += o.iterations;
  }
};

Result<std::vector<ObjectiveRange>> optima_over_rows(const DecisionProblem& p,
                                                     const SolverConfig& cfg,
                                                     const std::vector<LpRow>& rows,
                                                     Stats* stats) {
  using R = Result<std::vector<ObjectiveRange>>;
  std::vector<ObjectiveRange> ranges;
  ranges.reserve(p.objectives.size());

  for (std::size_t i = 0; i < p.objectives.size(); ++i) {
    const model::Objective& obj = p.objectives[i];
    LinearProgram best_lp{p.n_vars, obj.sense, obj.coefficients, rows};
    const LpOutcome best = lp::solve(best_lp, cfg.simplex());
    if (stats) stats->absorb(best);
    if (best.status == LpStatus::Infeasible)
      return R::failure(Status::InfeasibleProblem, "constraint set is empty");
    if (best.status == LpStatus::Unbounded)
      return R::failure(Status::UnboundedObjective,
                        "objective '" + obj.name + "' is unbounded over the feasible set");

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
        LinearProgram worst_lp{p.n_vars, anti(obj.sense), obj.coefficients, rows};
        const LpOutcome worst = lp::solve(worst_lp, cfg.simplex());
        if (stats) stats->absorb(worst);
        if (worst.status != LpStatus::Optimal)
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

// Pad a row to the auxiliary LP's width.
LpRow widen(const LpRow& row, int width) {
  LpRow out = row;
  out.coeffs.resize(width, 0.0);
  return out;
}

struct AuxProblem {
  LinearProgram lp;    // variables: x(0..n-1), alpha(n)
  int alpha_col = 0;
};

// Shared feasible set of the max-min family: crisp rows + membership >= alpha
// rows + alpha bounds. Objective left empty.
AuxProblem build_aux(const DecisionProblem& p, const SolverConfig& cfg,
                     const std::vector<std::optional<MembershipSpec>>& specs,
                     bool with_alpha_lower) {
  AuxProblem aux;
  const int n = p.n_vars;
  aux.alpha_col = n;
  const int width = n + 1;

  aux.lp.n_vars = width;
  aux.lp.sense = Sense::Maximize;
  aux.lp.objective.assign(width, 0.0);
  for (const LpRow& r : crisp_rows(p)) aux.lp.rows.push_back(widen(r, width));
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (!specs[i]) continue;
    for (LpRow& r : membership::as_lp_rows(*specs[i], p.objectives[i].coefficients, aux.alpha_col))
      aux.lp.rows.push_back(std::move(r));
  }
  LpRow upper;
  upper.coeffs.assign(width, 0.0);
  upper.coeffs[aux.alpha_col] = 1.0;
  upper.rel = Relation::LessEq;
  upper.rhs = cfg.alpha_upper;
  aux.lp.rows.push_back(std::move(upper));
  if (with_alpha_lower && cfg.alpha_lower > 0.0) {
    LpRow lower;
    lower.coeffs.assign(width, 0.0);
    lower.coeffs[aux.alpha_col] = 1.0;
    lower.rel = Relation::GreaterEq;
    lower.rhs = cfg.alpha_lower;
    aux.lp.rows.push_back(std::move(lower));
  }
  return aux;
}

CompromiseSolution extract(const DecisionProblem& p,
                           const std::vector<std::optional<MembershipSpec>>& specs,
                           const std::vector<ObjectiveRange>& ranges,
                           const std::vector<double>& full_x, CompromiseMode mode,
                           const Stats& stats) {
  CompromiseSolution s;
  s.mode = mode;
  s.x.assign(full_x.begin(), full_x.begin() + p.n_vars);
  s.z.resize(p.objectives.size());
  s.mu.resize(p.objectives.size());
  s.phi.resize(p.objectives.size());
  double alpha = 1.0;
  for (std::size_t i = 0; i < p.objectives.size(); ++i) {
    s.z[i] = lp::dot(p.objectives[i].coefficients, s.x);
    s.mu[i] = specs[i] ? membership::eval(*specs[i], s.z[i]) : 1.0;
    alpha = std::min(alpha, s.mu[i]);
    s.phi[i] = ranges[i].z_plus == 0.0 ? std::numeric_limits<double>::quiet_NaN()
                                       : s.z[i] / ranges[i].z_plus;
  }
  s.alpha = alpha;
  s.lp_solves = stats.lp_solves;
  s.simplex_iterations = stats.simplex_iterations;
  return s;
}

// Gradient of objective i's membership with respect to x (zero when the ramp
// is degenerate).
std::vector<double> membership_gradient(const model::Objective& obj,
                                        const std::optional<MembershipSpec>& spec) {
  std::vector<double> g(obj.coefficients.size(), 0.0);
  if (!spec) return g;
  const double width = spec->ramp_width();
  const double sign = obj.sense == Sense::Maximize ? 1.0 : -1.0;
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = sign * obj.coefficients[j] / width;
  return g;
}

Result<CompromiseSolution> solve_family(const DecisionProblem& p, const SolverConfig& cfg,
                                        CompromiseMode mode) {
  using R = Result<CompromiseSolution>;
  Stats stats;
  auto optima = optima_over_rows(p, cfg, crisp_rows(p), &stats);
  if (!optima) return R::failure(optima.status, optima.message);
  auto specs = range_memberships(p, *optima);
  if (!specs) return R::failure(specs.status, specs.message);

  AuxProblem aux = build_aux(p, cfg, *specs, /*with_alpha_lower=*/true);
  aux.lp.objective[aux.alpha_col] = 1.0;
  if (mode == CompromiseMode::Augmented) {
    auto weights = model::normalize_weights(p, cfg, model::WeightMode::ObjectivesOnly);
    if (!weights) return R::failure(weights.status, weights.message);
    // Memberships stay <= 1 over the crisp region, so the delta term can use
    // the raw linear expressions; the constant offsets do not move the argmax.
    for (std::size_t i = 0; i < p.objectives.size(); ++i) {
      const auto grad = membership_gradient(p.objectives[i], (*specs)[i]);
      for (int j = 0; j < p.n_vars; ++j)
        aux.lp.objective[j] += cfg.delta * weights->objective[i] * grad[j];
    }
  }

  const LpOutcome out = lp::solve(aux.lp, cfg.simplex());
  stats.absorb(out);
  if (out.status != LpStatus::Optimal)
    return R::failure(Status::InfeasibleAtAlphaLower,
                      "no point reaches the required acceptability level (alpha_lower = " +
                          std::to_string(cfg.alpha_lower) + ")");
  return R::success(extract(p, *specs, *optima, out.x, mode, stats));
}

}  // namespace

const char* to_string(CompromiseMode m) {
  switch (m) {
    case CompromiseMode::MaxMin: return "maxmin";
    case CompromiseMode::TwoPhase: return "two-phase";
    case CompromiseMode::Augmented: return "augmented";
  }
  return "?";
}

bool ObjectiveRange::degenerate() const {
  return std::abs(z_plus - z_minus) <= 1e-12 * (1.0 + std::abs(z_plus));
}

std::vector<LpRow> crisp_rows(const DecisionProblem& p) {
  std::vector<LpRow> rows;
  rows.reserve(p.constraints.size());
  for (const model::FuzzyConstraint& c : p.constraints)
    rows.push_back({c.coefficients, harden(c.relation), c.rhs});
  return rows;
}

Result<std::vector<ObjectiveRange>> individual_optima(const DecisionProblem& p,
                                                      const SolverConfig& cfg) {
  return optima_over_rows(p, cfg, crisp_rows(p), nullptr);
}

Result<std::vector<std::optional<MembershipSpec>>> range_memberships(
    const DecisionProblem& p, const std::vector<ObjectiveRange>& ranges) {
  using R = Result<std::vector<std::optional<MembershipSpec>>>;
  std::vector<std::optional<MembershipSpec>> specs(ranges.size());
  int informative = 0;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    if (ranges[i].degenerate()) continue;  // mu fixed at 1, excluded from the min
    const bool oriented = p.objectives[i].sense == Sense::Maximize
                              ? ranges[i].z_plus > ranges[i].z_minus
                              : ranges[i].z_plus < ranges[i].z_minus;
    if (!oriented)
      return R::failure(Status::DegenerateRamp,
                        "objective '" + p.objectives[i].name +
                            "': worst value lies beyond the best value; pick another "
                            "worst-value policy");
    specs[i] = MembershipSpec::objective_range(ranges[i].z_minus, ranges[i].z_plus,
                                               p.objectives[i].sense);
    ++informative;
  }
  if (informative == 0)
    return R::failure(Status::DegenerateRamp, "every objective ramp is degenerate");
  return R::success(std::move(specs));
}

Result<CompromiseSolution> solve_maxmin(const DecisionProblem& p, const SolverConfig& cfg) {
  return solve_family(p, cfg, CompromiseMode::MaxMin);
}

Result<CompromiseSolution> solve_augmented(const DecisionProblem& p, const SolverConfig& cfg) {
  return solve_family(p, cfg, CompromiseMode::Augmented);
}

Result<CompromiseSolution> two_phase_refine(const DecisionProblem& p, const SolverConfig& cfg) {
  using R = Result<CompromiseSolution>;
  auto phase1 = solve_maxmin(p, cfg);
  if (!phase1) return phase1;
  const double alpha0 = phase1->alpha;

  Stats stats;
  stats.lp_solves = phase1->lp_solves;
  stats.simplex_iterations = phase1->simplex_iterations;

  auto optima = optima_over_rows(p, cfg, crisp_rows(p), nullptr);
  if (!optima) return R::failure(optima.status, optima.message);
  auto specs = range_memberships(p, *optima);
  if (!specs) return R::failure(specs.status, specs.message);

  // Membership rows with alpha pinned to the phase-1 level (a hair below it,
  // so the phase-1 point itself stays feasible).
  const double pinned = alpha0 - 1e-9;
  LinearProgram lp2;
  lp2.n_vars = p.n_vars;
  lp2.sense = Sense::Maximize;
  lp2.objective.assign(p.n_vars, 0.0);
  lp2.rows = crisp_rows(p);
  const int alpha_col = p.n_vars;
  for (std::size_t i = 0; i < specs->size(); ++i) {
    if (!(*specs)[i]) continue;
    for (LpRow r : membership::as_lp_rows(*(*specs)[i], p.objectives[i].coefficients, alpha_col)) {
      const double a = r.coeffs[alpha_col];
      r.coeffs.resize(p.n_vars);
      r.rhs -= a * pinned;
      lp2.rows.push_back(std::move(r));
    }
  }
  const double k = static_cast<double>(p.objectives.size());
  for (std::size_t i = 0; i < p.objectives.size(); ++i) {
    const auto grad = membership_gradient(p.objectives[i], (*specs)[i]);
    for (int j = 0; j < p.n_vars; ++j) lp2.objective[j] += grad[j] / k;
  }

  const LpOutcome out = lp::solve(lp2, cfg.simplex());
  stats.absorb(out);
  if (out.status != LpStatus::Optimal)
    throw std::runtime_error("two-phase refinement lost the phase-1 point");
  return R::success(extract(p, *specs, *optima, out.x, CompromiseMode::TwoPhase, stats));
}

Result<std::vector<double>> satisfaction(const std::vector<double>& z,
                                         const std::vector<ObjectiveRange>& ranges) {
  using R = Result<std::vector<double>>;
  if (z.size() != ranges.size())
    throw std::invalid_argument("satisfaction: z and ranges differ in length");
  std::vector<double> phi(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (ranges[i].z_plus == 0.0)
      return R::failure(Status::ZeroBestValue,
                        "objective " + std::to_string(i) + " has z+ = 0");
    phi[i] = z[i] / ranges[i].z_plus;
  }
  return R::success(std::move(phi));
}

}  // namespace fmolp::crisp
