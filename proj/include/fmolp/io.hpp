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

#ifndef FMOLP_IO_HPP_
#define FMOLP_IO_HPP_

#include <stdexcept>
#include <string>

#include "fmolp/crisp.hpp"
#include "fmolp/fuzzy.hpp"
#include "fmolp/model.hpp"

namespace fmolp::io {

struct ParsedProblem {
  model::DecisionProblem problem;
  model::SolverConfig config;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Schema, Validation };
  ParseError(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Strict parse: unknown keys are rejected with the offending path; the parsed
// problem is validated before it is returned.
ParsedProblem parse_problem(const std::string& text);

// Canonical form: parse(serialize_problem(p, cfg)) reproduces p and the
// file-representable configuration exactly.
std::string serialize_problem(const model::DecisionProblem& problem,
                              const model::SolverConfig& cfg);

// FNV-1a over the canonical serialization, as 16 hex digits.
std::string problem_hash(const model::DecisionProblem& problem, const model::SolverConfig& cfg);

// Machine-readable result documents. Deterministic except wall_time_ms.
std::string result_document(const std::string& mode, const model::DecisionProblem& problem,
                            const model::SolverConfig& cfg,
                            const Result<crisp::CompromiseSolution>& result, double wall_time_ms);
std::string result_document(const std::string& mode, const model::DecisionProblem& problem,
                            const model::SolverConfig& cfg,
                            const Result<fuzzy::FuzzySolution>& result, double wall_time_ms);
std::string sweep_document(const model::DecisionProblem& problem, const model::SolverConfig& cfg,
                           const Result<fuzzy::SweepTable>& result, double wall_time_ms);

}  // namespace fmolp::io

#endif  // FMOLP_IO_HPP_
