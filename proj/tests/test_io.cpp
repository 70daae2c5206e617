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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "fmolp/case_study.hpp"
#include "fmolp/io.hpp"
#include "json.hpp"

using namespace fmolp;
using io::ParseError;

namespace {

model::DecisionProblem random_problem(std::uint64_t seed) {
  std::mt19937_64 g(seed);
  auto pick = [&g](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); };
  model::DecisionProblem p;
  p.n_vars = pick(1, 4);
  for (int j = 0; j < p.n_vars; ++j) p.variable_names.push_back("v" + std::to_string(j));
  const int k = pick(1, 3);
  for (int i = 0; i < k; ++i) {
    model::Objective o;
    o.name = "obj" + std::to_string(i);
    o.sense = pick(0, 1) ? lp::Sense::Maximize : lp::Sense::Minimize;
    for (int j = 0; j < p.n_vars; ++j) o.coefficients.push_back(pick(-50, 50) / 8.0);
    if (pick(0, 1)) {
      o.goal = pick(10, 500) / 4.0;
      o.tolerance = pick(1, 80) / 4.0;
    }
    if (pick(0, 1)) o.weight = pick(0, 10) / 2.0;
    p.objectives.push_back(std::move(o));
  }
  const int m = pick(1, 4);
  for (int i = 0; i < m; ++i) {
    model::FuzzyConstraint c;
    c.name = "row" + std::to_string(i);
    for (int j = 0; j < p.n_vars; ++j) c.coefficients.push_back(pick(-50, 50) / 8.0);
    const int rel = pick(0, 4);
    c.relation = static_cast<model::FuzzyRelation>(rel);
    c.rhs = pick(-100, 100) / 4.0;
    if (model::is_soft(c.relation) && pick(0, 1)) c.tolerance = pick(1, 40) / 4.0;
    if (pick(0, 1)) c.weight = pick(0, 10) / 2.0;
    p.constraints.push_back(std::move(c));
  }
  return p;
}

}  // namespace

TEST_CASE("the canonical case study round-trips through its file form") {
  const auto p = case_study::concrete_plant_problem();
  const auto cfg = case_study::case_study_config();
  const std::string text = io::serialize_problem(p, cfg);
  const auto parsed = io::parse_problem(text);
  CHECK(parsed.problem == p);
  CHECK(parsed.config.alpha_lower == cfg.alpha_lower);
  CHECK(parsed.config.alpha_upper == cfg.alpha_upper);
  CHECK(parsed.config.delta == cfg.delta);
  CHECK(parsed.config.worst_value_policy == cfg.worst_value_policy);
}

TEST_CASE("round-trip stability on random problems") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto p = random_problem(seed);
    model::SolverConfig cfg;
    cfg.alpha_lower = (seed % 5) / 10.0;
    const std::string text = io::serialize_problem(p, cfg);
    INFO("seed ", seed);
    const auto parsed = io::parse_problem(text);
    CHECK(parsed.problem == p);
    // And serialization is a fixed point.
    CHECK(io::serialize_problem(parsed.problem, parsed.config) == text);
  }
}

TEST_CASE("syntax errors are reported as such") {
  CHECK_THROWS_AS(io::parse_problem("{ not json"), ParseError);
  try {
    io::parse_problem("{ not json");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::Syntax);
  }
}

TEST_CASE("a mistyped relation names the offending field") {
  const std::string text = R"({
    "variables": ["x1"],
    "objectives": [{"name": "z", "sense": "maximize", "coefficients": [1]}],
    "constraints": [{"name": "c", "coefficients": [1], "relation": "<~", "rhs": 4}]
  })";
  try {
    io::parse_problem(text);
    FAIL("expected a schema error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::Schema);
    CHECK(std::string(e.what()).find("constraints[0].relation") != std::string::npos);
  }
}

TEST_CASE("unknown keys are rejected (strict mode)") {
  const std::string text = R"({
    "variables": ["x1"],
    "objectives": [{"name": "z", "sense": "maximize", "coefficients": [1]}],
    "constraints": [{"name": "c", "coefficients": [1], "relation": "<=", "rhs": 4,
                     "tolernace": 2}]
  })";
  try {
    io::parse_problem(text);
    FAIL("expected a schema error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::Schema);
    CHECK(std::string(e.what()).find("tolernace") != std::string::npos);
  }
}

TEST_CASE("an empty objectives list is a validation error") {
  const std::string text = R"({
    "variables": ["x1"],
    "objectives": [],
    "constraints": [{"name": "c", "coefficients": [1], "relation": "<=", "rhs": 4}]
  })";
  try {
    io::parse_problem(text);
    FAIL("expected a validation error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::Validation);
    CHECK(std::string(e.what()).find("k >= 1") != std::string::npos);
  }
}

TEST_CASE("config accepts exactly the documented keys") {
  const std::string good = R"({
    "variables": ["x1"],
    "objectives": [{"name": "z", "sense": "maximize", "coefficients": [1]}],
    "constraints": [{"name": "c", "coefficients": [1], "relation": "<=", "rhs": 4}],
    "config": {"delta": 0.001, "alpha_lower": 0.5, "worst_value_policy": "computed_min"}
  })";
  const auto parsed = io::parse_problem(good);
  CHECK(parsed.config.delta == doctest::Approx(0.001));
  CHECK(parsed.config.alpha_lower == doctest::Approx(0.5));
  CHECK(parsed.config.worst_value_policy == model::WorstValuePolicy::ComputedMin);

  const std::string bad = R"({
    "variables": ["x1"],
    "objectives": [{"name": "z", "sense": "maximize", "coefficients": [1]}],
    "constraints": [{"name": "c", "coefficients": [1], "relation": "<=", "rhs": 4}],
    "config": {"weight_policy": "as_given"}
  })";
  CHECK_THROWS_AS(io::parse_problem(bad), ParseError);
}

TEST_CASE("problem hash is stable and input-sensitive") {
  const auto p = case_study::concrete_plant_problem();
  const auto cfg = case_study::case_study_config();
  const auto h1 = io::problem_hash(p, cfg);
  const auto h2 = io::problem_hash(p, cfg);
  CHECK(h1 == h2);
  CHECK(h1.size() == 16);

  auto q = p;
  q.constraints[0].rhs += 1.0;
  CHECK(io::problem_hash(q, cfg) != h1);
}

TEST_CASE("result documents carry everything needed to re-verify") {
  const auto p = case_study::concrete_plant_problem();
  const auto cfg = case_study::case_study_config();
  const auto sol = crisp::solve_augmented(p, cfg);
  REQUIRE(sol.ok());
  const std::string doc = io::result_document("augmented", p, cfg, sol, 1.25);

  const auto j = nlohmann::json::parse(doc);
  CHECK(j["mode"] == "augmented");
  CHECK(j["status"] == "ok");
  CHECK(j["problem_hash"] == io::problem_hash(p, cfg));
  REQUIRE(j.contains("solution"));
  CHECK(j["solution"]["x"].size() == 3);
  CHECK(j["solution"]["z"].size() == 3);
  CHECK(j["solution"]["mu"].size() == 3);
  CHECK(j["solution"]["phi"].size() == 3);
  CHECK(j["solution"]["alpha"].get<double>() == doctest::Approx(sol->alpha));
  CHECK(j["stats"]["lp_solves"].get<int>() >= 4);
  CHECK(j["stats"]["wall_time_ms"].get<double>() == doctest::Approx(1.25));

  // Deterministic given the same wall time.
  CHECK(io::result_document("augmented", p, cfg, sol, 1.25) == doc);
}

TEST_CASE("failed solves produce a status document without a solution") {
  const auto p = case_study::concrete_plant_problem();
  auto cfg = case_study::case_study_config();
  cfg.alpha_lower = 1.0;
  const auto sol = crisp::solve_maxmin(p, cfg);
  REQUIRE_FALSE(sol.ok());
  const std::string doc = io::result_document("maxmin", p, cfg, sol, 0.5);
  const auto j = nlohmann::json::parse(doc);
  CHECK(j["status"] == "infeasible_at_alpha_lower");
  CHECK_FALSE(j.contains("solution"));
}
