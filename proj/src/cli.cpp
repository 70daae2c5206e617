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

#include "fmolp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fmolp/case_study.hpp"
#include "fmolp/crisp.hpp"
#include "fmolp/fuzzy.hpp"
#include "fmolp/io.hpp"
#include "fmolp/model.hpp"

namespace fmolp::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitReported = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw io::ParseError(io::ParseError::Kind::Syntax, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << content;
  if (!f.good()) throw std::runtime_error("write to '" + path + "' failed");
}

std::string fmt(double v) {
  if (std::isnan(v)) return "-";
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(4) << v;
  return ss.str();
}

void print_solution_table(std::ostream& os, const model::DecisionProblem& p,
                          const std::vector<double>& x, const std::vector<double>& z,
                          const std::vector<double>& mu, const std::vector<double>& phi,
                          double alpha) {
  os << "variables\n";
  for (int j = 0; j < p.n_vars; ++j) {
    const std::string name =
        p.variable_names.empty() ? "x" + std::to_string(j + 1) : p.variable_names[j];
    os << "  " << std::left << std::setw(22) << name << std::right << std::setw(14) << fmt(x[j])
       << "\n";
  }
  os << "objectives\n";
  os << "  " << std::left << std::setw(22) << "name" << std::right << std::setw(14) << "z"
     << std::setw(10) << "mu" << std::setw(10) << "phi" << "\n";
  for (std::size_t i = 0; i < p.objectives.size(); ++i)
    os << "  " << std::left << std::setw(22) << p.objectives[i].name << std::right
       << std::setw(14) << fmt(z[i]) << std::setw(10) << fmt(mu[i]) << std::setw(10)
       << fmt(phi[i]) << "\n";
  os << "alpha " << fmt(alpha) << "\n";
}

void print_fuzzy_rows(std::ostream& os, const model::DecisionProblem& p,
                      const fuzzy::FuzzySolution& s) {
  os << "constraints\n";
  os << "  " << std::left << std::setw(22) << "name" << std::right << std::setw(10) << "mu"
     << std::setw(14) << "slack_used" << "\n";
  for (std::size_t j = 0; j < p.constraints.size(); ++j)
    os << "  " << std::left << std::setw(22) << p.constraints[j].name << std::right
       << std::setw(10) << fmt(s.mu_con[j]) << std::setw(14) << fmt(s.slack_used[j]) << "\n";
}

int cmd_validate(const std::string& file) {
  try {
    io::parse_problem(read_file(file));
  } catch (const io::ParseError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kExitInput;
  }
  std::cout << "ok\n";
  return kExitOk;
}

int cmd_solve(const std::string& file, std::string mode, const std::string& json_path) {
  const auto start = std::chrono::steady_clock::now();
  io::ParsedProblem in = io::parse_problem(read_file(file));

  if (mode == "auto") mode = in.problem.has_fuzzy_content() ? "fuzzy" : "augmented";

  std::string doc;
  int code = kExitOk;
  if (mode == "maxmin" || mode == "augmented" || mode == "two-phase") {
    Result<crisp::CompromiseSolution> r =
        mode == "maxmin"      ? crisp::solve_maxmin(in.problem, in.config)
        : mode == "augmented" ? crisp::solve_augmented(in.problem, in.config)
                              : crisp::two_phase_refine(in.problem, in.config);
    if (r) {
      print_solution_table(std::cout, in.problem, r->x, r->z, r->mu, r->phi, r->alpha);
    } else {
      std::cerr << to_string(r.status) << ": " << r.message << "\n";
      code = kExitReported;
    }
    doc = io::result_document(mode, in.problem, in.config, r, elapsed_ms(start));
  } else if (mode == "fuzzy" || mode == "goal") {
    Result<fuzzy::FuzzySolution> r = mode == "fuzzy"
                                         ? fuzzy::solve_fuzzy_augmented(in.problem, in.config)
                                         : fuzzy::solve_goal_form(in.problem, in.config);
    if (r) {
      print_solution_table(std::cout, in.problem, r->x, r->z, r->mu_obj, r->phi, r->alpha);
      print_fuzzy_rows(std::cout, in.problem, *r);
    } else {
      std::cerr << to_string(r.status) << ": " << r.message << "\n";
      code = kExitReported;
    }
    doc = io::result_document(mode, in.problem, in.config, r, elapsed_ms(start));
  } else {
    std::cerr << "unknown mode '" << mode << "'\n";
    return kExitInput;
  }
  if (!json_path.empty()) write_file(json_path, doc);
  return code;
}

int cmd_sweep(const std::string& file, double from, double to, int steps,
              const std::string& json_path) {
  if (steps < 1 || from < 0.0 || to > 1.0 || from > to) {
    std::cerr << "sweep needs 0 <= alpha-from <= alpha-to <= 1 and steps >= 1\n";
    return kExitInput;
  }
  const auto start = std::chrono::steady_clock::now();
  io::ParsedProblem in = io::parse_problem(read_file(file));

  std::vector<double> grid;
  for (int i = 0; i <= steps; ++i) {
    const double v = i == steps ? to : from + (to - from) * static_cast<double>(i) / steps;
    grid.push_back(std::min(1.0, std::max(0.0, v)));
  }

  Result<fuzzy::SweepTable> r = fuzzy::alpha_sweep(in.problem, in.config, grid);
  if (!r) {
    std::cerr << to_string(r.status) << ": " << r.message << "\n";
    return kExitReported;
  }
  std::cout << std::left << std::setw(8) << "alpha" << std::setw(12) << "feasible";
  for (const auto& o : in.problem.objectives) std::cout << std::right << std::setw(14) << o.name;
  std::cout << "\n";
  for (const auto& row : r->rows) {
    std::cout << std::left << std::setw(8) << fmt(row.alpha) << std::setw(12)
              << (row.feasible ? "yes" : "no");
    if (row.feasible)
      for (double z : row.z) std::cout << std::right << std::setw(14) << fmt(z);
    std::cout << "\n";
  }
  if (!json_path.empty())
    write_file(json_path, io::sweep_document(in.problem, in.config, r, elapsed_ms(start)));
  return kExitOk;
}

int cmd_case_study(const std::string& variant_name, const std::string& csv_path,
                   const std::string& json_path) {
  const auto start = std::chrono::steady_clock::now();
  if (variant_name == "narrative") {
    // Documented variant: the narrative crews row conflicts with the demand
    // rows, so the expected outcome is an infeasibility report.
    const auto variant = case_study::narrative_variant();
    const auto problem = case_study::concrete_plant_problem(variant);
    const auto cfg = case_study::case_study_config(variant);
    Result<fuzzy::FuzzySolution> r = fuzzy::solve_fuzzy_augmented(problem, cfg);
    if (!json_path.empty())
      write_file(json_path,
                 io::result_document("fuzzy", problem, cfg, r, elapsed_ms(start)));
    if (!r) {
      std::cerr << to_string(r.status) << ": " << r.message << "\n";
      return kExitReported;
    }
    print_solution_table(std::cout, problem, r->x, r->z, r->mu_obj, r->phi, r->alpha);
    return kExitOk;
  }
  if (variant_name != "full") {
    std::cerr << "unknown variant '" << variant_name << "' (expected full or narrative)\n";
    return kExitInput;
  }

  const auto cfg = case_study::case_study_config(case_study::canonical_variant());
  Result<case_study::ReproductionReport> rep = case_study::reproduce_tables(cfg);
  if (!rep) {
    std::cerr << to_string(rep.status) << ": " << rep.message << "\n";
    return kExitReported;
  }

  std::cout << std::left << std::setw(28) << "quantity" << std::right << std::setw(14)
            << "reference" << std::setw(14) << "computed" << std::setw(12) << "tolerance"
            << "  result\n";
  for (const auto& row : rep->rows) {
    std::cout << std::left << std::setw(28) << row.quantity << std::right << std::setw(14)
              << fmt(row.reference) << std::setw(14) << fmt(row.computed) << std::setw(12)
              << fmt(row.tolerance) << "  "
              << (row.expected_mismatch ? "expected-mismatch" : (row.pass ? "pass" : "FAIL"))
              << "\n";
  }
  const auto problem = case_study::concrete_plant_problem(case_study::canonical_variant());
  std::cout << "\ncrisp compromise (augmented)\n";
  print_solution_table(std::cout, problem, rep->crisp_solution.x, rep->crisp_solution.z,
                       rep->crisp_solution.mu, rep->crisp_solution.phi,
                       rep->crisp_solution.alpha);
  std::cout << "\nfuzzy compromise\n";
  print_solution_table(std::cout, problem, rep->fuzzy_solution.x, rep->fuzzy_solution.z,
                       rep->fuzzy_solution.mu_obj, rep->fuzzy_solution.phi,
                       rep->fuzzy_solution.alpha);
  print_fuzzy_rows(std::cout, problem, rep->fuzzy_solution);

  if (!csv_path.empty()) case_study::export_comparison(*rep, csv_path);
  if (!json_path.empty())
    write_file(json_path,
               io::result_document("fuzzy", problem, cfg,
                                   Result<fuzzy::FuzzySolution>::success(rep->fuzzy_solution),
                                   elapsed_ms(start)));
  return rep->all_pass() ? kExitOk : kExitReported;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"fuzzy multi-objective linear programming solver"};
  app.require_subcommand(1);

  std::string file, mode = "auto", json_path, csv_path, variant = "full";
  double alpha_from = 0.0, alpha_to = 1.0;
  int steps = 10;

  CLI::App* validate = app.add_subcommand("validate", "check a problem file");
  validate->add_option("file", file, "problem file (JSON)")->required();

  CLI::App* solve = app.add_subcommand("solve", "solve a problem file");
  solve->add_option("file", file, "problem file (JSON)")->required();
  solve->add_option("--mode", mode,
                    "maxmin | augmented | two-phase | fuzzy | goal (default: fuzzy when the "
                    "problem has fuzzy content, augmented otherwise)");
  solve->add_option("--json", json_path, "write the result document here");

  CLI::App* sweep = app.add_subcommand("sweep", "solve across a grid of acceptability levels");
  sweep->add_option("file", file, "problem file (JSON)")->required();
  sweep->add_option("--alpha-from", alpha_from, "grid start (default 0)");
  sweep->add_option("--alpha-to", alpha_to, "grid end (default 1)");
  sweep->add_option("--steps", steps, "number of grid intervals (default 10)");
  sweep->add_option("--json", json_path, "write the sweep document here");

  CLI::App* cs = app.add_subcommand("case-study", "reproduce the bundled concrete-plant study");
  cs->add_option("--variant", variant, "full | narrative (default full)");
  cs->add_option("--csv", csv_path, "write the crisp-vs-fuzzy comparison CSV here");
  cs->add_option("--json", json_path, "write the fuzzy result document here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(file);
    if (app.got_subcommand(solve)) return cmd_solve(file, mode, json_path);
    if (app.got_subcommand(sweep)) return cmd_sweep(file, alpha_from, alpha_to, steps, json_path);
    if (app.got_subcommand(cs)) return cmd_case_study(variant, csv_path, json_path);
  } catch (const io::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace fmolp::cli
