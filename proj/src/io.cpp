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

#include "fmolp/io.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "json.hpp"

namespace fmolp::io {

using json = nlohmann::ordered_json;
using model::DecisionProblem;
using model::FuzzyRelation;
using model::SolverConfig;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
  throw ParseError(ParseError::Kind::Schema, path + ": " + msg);
}

void reject_unknown_keys(const json& obj, const std::vector<std::string>& allowed,
                         const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const std::string& k : allowed)
      if (it.key() == k) { known = true; break; }
    if (!known) schema_error(path, "unknown key '" + it.key() + "'");
  }
}

double require_number(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) schema_error(path, "missing key '" + key + "'");
  if (!obj[key].is_number()) schema_error(path + "." + key, "expected a number");
  return obj[key].get<double>();
}

std::string require_string(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) schema_error(path, "missing key '" + key + "'");
  if (!obj[key].is_string()) schema_error(path + "." + key, "expected a string");
  return obj[key].get<std::string>();
}

std::vector<double> require_number_array(const json& obj, const std::string& key,
                                         const std::string& path) {
  if (!obj.contains(key)) schema_error(path, "missing key '" + key + "'");
  if (!obj[key].is_array()) schema_error(path + "." + key, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : obj[key]) {
    if (!v.is_number()) schema_error(path + "." + key, "expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

FuzzyRelation parse_relation(const std::string& s, const std::string& path) {
  if (s == "<=") return FuzzyRelation::LessEq;
  if (s == "<=~") return FuzzyRelation::LessEqSoft;
  if (s == ">=") return FuzzyRelation::GreaterEq;
  if (s == ">=~") return FuzzyRelation::GreaterEqSoft;
  if (s == "=") return FuzzyRelation::Equal;
  schema_error(path, "unknown relation '" + s + "' (expected <=, <=~, >=, >=~ or =)");
}

lp::Sense parse_sense(const std::string& s, const std::string& path) {
  if (s == "maximize") return lp::Sense::Maximize;
  if (s == "minimize") return lp::Sense::Minimize;
  schema_error(path, "unknown sense '" + s + "' (expected maximize or minimize)");
}

json config_json(const SolverConfig& cfg) {
  json c;
  c["delta"] = cfg.delta;
  c["alpha_lower"] = cfg.alpha_lower;
  c["alpha_upper"] = cfg.alpha_upper;
  c["worst_value_policy"] = model::to_string(cfg.worst_value_policy);
  return c;
}

json vec_json(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) {
    if (std::isfinite(x))
      a.push_back(x);
    else
      a.push_back(nullptr);  // phi is undefined when z+ = 0
  }
  return a;
}

json document_base(const std::string& mode, const DecisionProblem& p, const SolverConfig& cfg,
                   Status status, const std::string& message) {
  json doc;
  doc["mode"] = mode;
  doc["status"] = to_string(status);
  if (!message.empty()) doc["message"] = message;
  doc["problem_hash"] = problem_hash(p, cfg);
  doc["config"] = config_json(cfg);
  doc["config"]["weight_policy"] = model::to_string(cfg.weight_policy);
  return doc;
}

json stats_json(int lp_solves, int simplex_iterations, double wall_time_ms) {
  json s;
  s["lp_solves"] = lp_solves;
  s["simplex_iterations"] = simplex_iterations;
  s["wall_time_ms"] = wall_time_ms;
  return s;
}

}  // namespace

ParsedProblem parse_problem(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(ParseError::Kind::Syntax, e.what());
  }
  if (!root.is_object()) throw ParseError(ParseError::Kind::Schema, "top level must be an object");
  reject_unknown_keys(root, {"variables", "objectives", "constraints", "config"}, "$");

  ParsedProblem out;
  DecisionProblem& p = out.problem;

  if (!root.contains("variables") || !root["variables"].is_array())
    schema_error("$", "missing 'variables' array");
  for (const auto& v : root["variables"]) {
    if (!v.is_string()) schema_error("$.variables", "expected an array of strings");
    p.variable_names.push_back(v.get<std::string>());
  }
  p.n_vars = static_cast<int>(p.variable_names.size());

  if (!root.contains("objectives") || !root["objectives"].is_array())
    schema_error("$", "missing 'objectives' array");
  std::size_t idx = 0;
  for (const auto& o : root["objectives"]) {
    const std::string path = "$.objectives[" + std::to_string(idx++) + "]";
    if (!o.is_object()) schema_error(path, "expected an object");
    reject_unknown_keys(o, {"name", "sense", "coefficients", "goal", "tolerance", "weight"}, path);
    model::Objective obj;
    obj.name = require_string(o, "name", path);
    obj.sense = parse_sense(require_string(o, "sense", path), path + ".sense");
    obj.coefficients = require_number_array(o, "coefficients", path);
    if (o.contains("goal")) obj.goal = require_number(o, "goal", path);
    if (o.contains("tolerance")) obj.tolerance = require_number(o, "tolerance", path);
    if (o.contains("weight")) obj.weight = require_number(o, "weight", path);
    p.objectives.push_back(std::move(obj));
  }

  if (!root.contains("constraints") || !root["constraints"].is_array())
    schema_error("$", "missing 'constraints' array");
  idx = 0;
  for (const auto& c : root["constraints"]) {
    const std::string path = "$.constraints[" + std::to_string(idx++) + "]";
    if (!c.is_object()) schema_error(path, "expected an object");
    reject_unknown_keys(c, {"name", "coefficients", "relation", "rhs", "tolerance", "weight"},
                        path);
    model::FuzzyConstraint con;
    con.name = require_string(c, "name", path);
    con.coefficients = require_number_array(c, "coefficients", path);
    con.relation = parse_relation(require_string(c, "relation", path), path + ".relation");
    con.rhs = require_number(c, "rhs", path);
    if (c.contains("tolerance")) con.tolerance = require_number(c, "tolerance", path);
    if (c.contains("weight")) con.weight = require_number(c, "weight", path);
    p.constraints.push_back(std::move(con));
  }

  if (root.contains("config")) {
    const json& c = root["config"];
    if (!c.is_object()) schema_error("$.config", "expected an object");
    reject_unknown_keys(c, {"delta", "alpha_lower", "alpha_upper", "worst_value_policy"},
                        "$.config");
    if (c.contains("delta")) out.config.delta = require_number(c, "delta", "$.config");
    if (c.contains("alpha_lower"))
      out.config.alpha_lower = require_number(c, "alpha_lower", "$.config");
    if (c.contains("alpha_upper"))
      out.config.alpha_upper = require_number(c, "alpha_upper", "$.config");
    if (c.contains("worst_value_policy")) {
      const std::string s = require_string(c, "worst_value_policy", "$.config");
      if (s == "zero")
        out.config.worst_value_policy = model::WorstValuePolicy::Zero;
      else if (s == "computed_min")
        out.config.worst_value_policy = model::WorstValuePolicy::ComputedMin;
      else
        schema_error("$.config.worst_value_policy",
                     "unknown policy '" + s + "' (expected zero or computed_min)");
    }
  }

  const model::ValidationReport report = model::validate(p, out.config);
  if (!report.ok()) {
    std::string msg;
    for (const auto& issue : report.issues) {
      if (!msg.empty()) msg += "; ";
      msg += issue.path + ": " + issue.message;
    }
    throw ParseError(ParseError::Kind::Validation, msg);
  }
  return out;
}

std::string serialize_problem(const DecisionProblem& p, const SolverConfig& cfg) {
  json root;
  root["variables"] = p.variable_names;
  root["objectives"] = json::array();
  for (const auto& o : p.objectives) {
    json j;
    j["name"] = o.name;
    j["sense"] = model::to_string(o.sense);
    j["coefficients"] = o.coefficients;
    if (o.goal) j["goal"] = *o.goal;
    if (o.tolerance) j["tolerance"] = *o.tolerance;
    if (o.weight) j["weight"] = *o.weight;
    root["objectives"].push_back(std::move(j));
  }
  root["constraints"] = json::array();
  for (const auto& c : p.constraints) {
    json j;
    j["name"] = c.name;
    j["coefficients"] = c.coefficients;
    j["relation"] = model::to_string(c.relation);
    j["rhs"] = c.rhs;
    if (c.tolerance != 0.0) j["tolerance"] = c.tolerance;
    if (c.weight) j["weight"] = *c.weight;
    root["constraints"].push_back(std::move(j));
  }
  root["config"] = config_json(cfg);
  return root.dump(2) + "\n";
}

std::string problem_hash(const DecisionProblem& p, const SolverConfig& cfg) {
  const std::string text = serialize_problem(p, cfg);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string result_document(const std::string& mode, const DecisionProblem& p,
                            const SolverConfig& cfg,
                            const Result<crisp::CompromiseSolution>& result,
                            double wall_time_ms) {
  json doc = document_base(mode, p, cfg, result.status, result.message);
  int solves = 0, iters = 0;
  if (result) {
    const auto& s = *result;
    json sol;
    sol["x"] = vec_json(s.x);
    sol["z"] = vec_json(s.z);
    sol["mu"] = vec_json(s.mu);
    sol["alpha"] = s.alpha;
    sol["phi"] = vec_json(s.phi);
    doc["solution"] = std::move(sol);
    solves = s.lp_solves;
    iters = s.simplex_iterations;
  }
  doc["stats"] = stats_json(solves, iters, wall_time_ms);
  return doc.dump(2) + "\n";
}

std::string result_document(const std::string& mode, const DecisionProblem& p,
                            const SolverConfig& cfg, const Result<fuzzy::FuzzySolution>& result,
                            double wall_time_ms) {
  json doc = document_base(mode, p, cfg, result.status, result.message);
  int solves = 0, iters = 0;
  if (result) {
    const auto& s = *result;
    json sol;
    sol["x"] = vec_json(s.x);
    sol["z"] = vec_json(s.z);
    sol["mu"] = vec_json(s.mu_obj);
    sol["mu_constraints"] = vec_json(s.mu_con);
    sol["alpha"] = s.alpha;
    sol["phi"] = vec_json(s.phi);
    sol["slack_used"] = vec_json(s.slack_used);
    doc["solution"] = std::move(sol);
    solves = s.lp_solves;
    iters = s.simplex_iterations;
  }
  doc["stats"] = stats_json(solves, iters, wall_time_ms);
  return doc.dump(2) + "\n";
}

std::string sweep_document(const DecisionProblem& p, const SolverConfig& cfg,
                           const Result<fuzzy::SweepTable>& result, double wall_time_ms) {
  json doc = document_base("sweep", p, cfg, result.status, result.message);
  if (result) {
    json rows = json::array();
    for (const auto& r : result->rows) {
      json j;
      j["alpha"] = r.alpha;
      j["feasible"] = r.feasible;
      if (r.feasible) {
        j["x"] = vec_json(r.x);
        j["z"] = vec_json(r.z);
        j["phi"] = vec_json(r.phi);
      }
      rows.push_back(std::move(j));
    }
    doc["rows"] = std::move(rows);
  }
  doc["stats"] = stats_json(0, 0, wall_time_ms);
  return doc.dump(2) + "\n";
}

}  // namespace fmolp::io
