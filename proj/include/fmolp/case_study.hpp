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

#ifndef FMOLP_CASE_STUDY_HPP_
#define FMOLP_CASE_STUDY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "fmolp/crisp.hpp"
#include "fmolp/fuzzy.hpp"
#include "fmolp/model.hpp"
#include "fmolp/status.hpp"

// Bundled dataset: a concrete plant delivering to three construction sites,
// with three objectives (profit, quality index, worker satisfaction) and
// weekly resource/demand rows carrying tolerances. Reference solutions from
// the published study are embedded for the reproduction harness.
namespace fmolp::case_study {

enum class ConstraintSet {
  FullList,   // the "written in full" rows; reproduces the reference tables
  Narrative,  // the narrative per-resource rows, kept for documentation
};

struct CaseStudyVariant {
  ConstraintSet constraint_set = ConstraintSet::FullList;
  double site_c_demand = 903.0;  // the narrative text prints 756 instead
  std::optional<model::WorstValuePolicy> worst_value_policy;  // config override
  double aux_row_tolerance = 0.0;  // the fifth <=~ row has no published tolerance
};

CaseStudyVariant canonical_variant();
CaseStudyVariant narrative_variant();

model::DecisionProblem concrete_plant_problem(const CaseStudyVariant& variant = {});
model::SolverConfig case_study_config(const CaseStudyVariant& variant = {});

// Every number embedded in the dataset, with its citation in the source study.
struct ProvenanceEntry {
  std::string key;
  double value;
  std::string source;
};
const std::vector<ProvenanceEntry>& dataset_provenance();

enum class CheckKind { AbsDiff, RelDiff, LowerBound, UpperBound };

struct CheckRow {
  std::string quantity;
  std::string source;
  CheckKind kind = CheckKind::AbsDiff;
  double reference = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool expected_mismatch = false;  // known discrepancy in the source; never fails
  bool pass = false;
};

struct ReproductionReport {
  std::vector<CheckRow> rows;
  std::vector<crisp::ObjectiveRange> ranges;
  crisp::CompromiseSolution crisp_solution;  // augmented
  fuzzy::FuzzySolution fuzzy_solution;

  bool all_pass() const;  // expected mismatches excluded
};

// Solves the canonical problem crisp and fuzzy and checks every reproducible
// quantity against the reference tables at its declared tolerance.
Result<ReproductionReport> reproduce_tables(const model::SolverConfig& cfg);

// CSV behind the crisp-vs-fuzzy comparison: one data row per objective,
// 4 decimal places, LF line endings. Throws std::runtime_error on IO failure.
void export_comparison(const ReproductionReport& report, const std::string& path);

}  // namespace fmolp::case_study

#endif  // FMOLP_CASE_STUDY_HPP_
