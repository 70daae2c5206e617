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
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fmolp/case_study.hpp"

using namespace fmolp;
using case_study::CaseStudyVariant;
using case_study::ConstraintSet;

namespace {

const model::FuzzyConstraint* find_row(const model::DecisionProblem& p, const std::string& name) {
  for (const auto& c : p.constraints)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("canonical dataset validates and matches the published rows") {
  const auto p = case_study::concrete_plant_problem();
  const auto cfg = case_study::case_study_config();
  CHECK(model::validate(p, cfg).ok());
  CHECK(cfg.alpha_lower == doctest::Approx(0.80));

  CHECK(p.objectives[1].coefficients == std::vector<double>{9.0, 10.0, 7.5});
  CHECK(p.objectives[2].coefficients == std::vector<double>{8.0, 7.0, 9.0});
  CHECK(*p.objectives[0].goal == doctest::Approx(27000.0));
  CHECK(*p.objectives[0].tolerance == doctest::Approx(2100.0));

  const auto* plant = find_row(p, "plant_capacity");
  REQUIRE(plant != nullptr);
  CHECK(plant->rhs == doctest::Approx(2520.0));
  CHECK(plant->tolerance == doctest::Approx(200.0));

  const auto* site_c = find_row(p, "site_c_demand");
  REQUIRE(site_c != nullptr);
  CHECK(site_c->rhs == doctest::Approx(903.0));
  CHECK(site_c->relation == model::FuzzyRelation::GreaterEqSoft);

  const auto* aux = find_row(p, "aux_equipment");
  REQUIRE(aux != nullptr);
  CHECK(aux->tolerance == 0.0);  // no published tolerance
}

TEST_CASE("narrative variant keeps the printed resource rows") {
  const auto p = case_study::concrete_plant_problem(case_study::narrative_variant());
  const auto* mixers = find_row(p, "transit_mixers");
  REQUIRE(mixers != nullptr);
  CHECK(mixers->coefficients == std::vector<double>{0.12, 0.11, 0.14});
  CHECK(mixers->rhs == doctest::Approx(294.0));

  const auto* crews = find_row(p, "site_crews");
  REQUIRE(crews != nullptr);
  CHECK(crews->coefficients == std::vector<double>{6.0, 7.0, 9.0});

  const auto* site_c = find_row(p, "site_c_demand");
  REQUIRE(site_c != nullptr);
  CHECK(site_c->rhs == doctest::Approx(756.0));
  CHECK(find_row(p, "aux_equipment") == nullptr);

  // The narrative crews row is inconsistent with the demands: the region is
  // empty even at full relaxation.
  const auto sol = fuzzy::solve_fuzzy_augmented(p, case_study::case_study_config());
  CHECK(sol.status == Status::InfeasibleProblem);
}

TEST_CASE("variant knobs: site demand and the aux-row tolerance") {
  CaseStudyVariant v;
  v.site_c_demand = 756.0;
  v.aux_row_tolerance = 15.0;
  const auto p = case_study::concrete_plant_problem(v);
  CHECK(find_row(p, "site_c_demand")->rhs == doctest::Approx(756.0));
  CHECK(find_row(p, "aux_equipment")->tolerance == doctest::Approx(15.0));

  CaseStudyVariant w;
  w.worst_value_policy = model::WorstValuePolicy::ComputedMin;
  CHECK(case_study::case_study_config(w).worst_value_policy ==
        model::WorstValuePolicy::ComputedMin);
}

TEST_CASE("the reference compromise point is feasible, near-binding on the mixer row") {
  const auto p = case_study::concrete_plant_problem();
  const std::vector<double> x = {635.94, 863.43, 903.0};
  for (const auto& row : crisp::crisp_rows(p)) CHECK(lp::row_violation(row, x) <= 0.5);
  const auto* mixers = find_row(p, "transit_mixers");
  const double usage = lp::dot(mixers->coefficients, x);
  CHECK(usage <= mixers->rhs + 1e-9);
  CHECK(mixers->rhs - usage <= 0.5);  // near-binding
}

TEST_CASE("every embedded number carries a provenance entry") {
  const auto& prov = case_study::dataset_provenance();
  auto lookup = [&prov](const std::string& key) -> const case_study::ProvenanceEntry* {
    for (const auto& e : prov)
      if (e.key == key) return &e;
    return nullptr;
  };

  const auto p = case_study::concrete_plant_problem();
  for (const auto& o : p.objectives) {
    for (std::size_t j = 0; j < o.coefficients.size(); ++j) {
      const auto* e = lookup(o.name + ".c" + std::to_string(j + 1));
      REQUIRE(e != nullptr);
      CHECK(e->value == o.coefficients[j]);
      CHECK_FALSE(e->source.empty());
    }
    REQUIRE(lookup(o.name + ".goal") != nullptr);
    CHECK(lookup(o.name + ".goal")->value == *o.goal);
    REQUIRE(lookup(o.name + ".tolerance") != nullptr);
    CHECK(lookup(o.name + ".tolerance")->value == *o.tolerance);
  }
  for (const auto& c : p.constraints) {
    const auto* e = lookup(c.name + ".rhs");
    REQUIRE(e != nullptr);
    CHECK(e->value == c.rhs);
    if (c.tolerance > 0.0) {
      const auto* t = lookup(c.name + ".tolerance");
      REQUIRE(t != nullptr);
      CHECK(t->value == c.tolerance);
    }
  }
  // Reference values are sourced too.
  CHECK(lookup("reference.z_plus.1") != nullptr);
  CHECK(lookup("reference.alpha_crisp_printed") != nullptr);
  CHECK(lookup("reference.alpha_fuzzy") != nullptr);
}

TEST_CASE("reproduce_tables passes every reproducible check") {
  const auto rep = case_study::reproduce_tables(case_study::case_study_config());
  REQUIRE(rep.ok());
  CHECK(rep->all_pass());
  for (const auto& row : rep->rows) {
    INFO(row.quantity);
    CHECK((row.pass || row.expected_mismatch));
  }

  // The printed overall acceptability is recorded as an expected mismatch,
  // not a failure: the phi row implies min mu ~ 0.996.
  bool found = false;
  for (const auto& row : rep->rows)
    if (row.quantity == "alpha_crisp_printed") {
      found = true;
      CHECK(row.expected_mismatch);
      CHECK(std::abs(row.computed - 0.996) < 0.002);
      CHECK(row.reference == doctest::Approx(0.941));
    }
  CHECK(found);
}

TEST_CASE("comparison CSV has one data row per objective, LF endings, 4 decimals") {
  const auto rep = case_study::reproduce_tables(case_study::case_study_config());
  REQUIRE(rep.ok());
  const std::string path = "case_study_comparison_test.csv";
  case_study::export_comparison(*rep, path);

  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string text = ss.str();
  CHECK(text.find('\r') == std::string::npos);

  std::istringstream lines(text);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "objective,crisp_z,fuzzy_z,crisp_phi,fuzzy_phi,crisp_alpha,fuzzy_alpha");
  int data_rows = 0;
  double fuzzy_alpha = -1.0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    ++data_rows;
    // crisp_phi (4th column) must match the report.
    std::istringstream cells(line);
    std::string cell;
    std::vector<std::string> row;
    while (std::getline(cells, cell, ',')) row.push_back(cell);
    REQUIRE(row.size() == 7);
    CHECK(std::stod(row[3]) ==
          doctest::Approx(rep->crisp_solution.phi[data_rows - 1]).epsilon(1e-3));
    const double fa = std::stod(row[6]);
    if (fuzzy_alpha < 0.0) fuzzy_alpha = fa;
    CHECK(fa == doctest::Approx(fuzzy_alpha));  // constant across rows
    CHECK(fa >= 0.80);
    CHECK(fa <= 1.0);
    // 4 decimal places in every numeric cell
    for (int c = 1; c < 7; ++c) {
      const auto dotpos = row[c].find('.');
      REQUIRE(dotpos != std::string::npos);
      CHECK(row[c].size() - dotpos - 1 == 4);
    }
  }
  CHECK(data_rows == 3);
  std::remove(path.c_str());
}
