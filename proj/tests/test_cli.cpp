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
#include <iostream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "fmolp/case_study.hpp"
#include "fmolp/cli.hpp"
#include "fmolp/io.hpp"
#include "json.hpp"

using namespace fmolp;

namespace {

struct CaptureStreams {
  std::ostringstream out, err;
  std::streambuf* old_out;
  std::streambuf* old_err;
  CaptureStreams() : old_out(std::cout.rdbuf(out.rdbuf())), old_err(std::cerr.rdbuf(err.rdbuf())) {}
  ~CaptureStreams() {
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
  }
};

int run(const std::vector<std::string>& args, std::string* out = nullptr,
        std::string* err = nullptr) {
  CaptureStreams cap;
  const int code = cli::run_cli(args);
  if (out) *out = cap.out.str();
  if (err) *err = cap.err.str();
  return code;
}

std::string write_case_study_file(const std::string& path) {
  const auto p = case_study::concrete_plant_problem();
  const auto cfg = case_study::case_study_config();
  std::ofstream f(path, std::ios::binary);
  f << io::serialize_problem(p, cfg);
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string strip_wall_time(std::string text) {
  return std::regex_replace(text, std::regex(R"("wall_time_ms": [0-9eE.+-]+)"),
                            "\"wall_time_ms\": X");
}

}  // namespace

TEST_CASE("validate accepts the case-study file and rejects a broken one") {
  const std::string good = write_case_study_file("cli_good.json");
  CHECK(run({"fmolp", "validate", good}) == 0);

  std::ofstream f("cli_bad.json");
  f << "{\"variables\": [], \"objectives\": [], \"constraints\": []}";
  f.close();
  std::string err;
  CHECK(run({"fmolp", "validate", "cli_bad.json"}, nullptr, &err) == 2);
  CHECK(err.find("k >= 1") != std::string::npos);

  std::remove("cli_good.json");
  std::remove("cli_bad.json");
}

TEST_CASE("solve on a missing file exits with the input-error code") {
  CHECK(run({"fmolp", "solve", "does_not_exist.json"}) == 2);
}

TEST_CASE("unknown flags and missing subcommands are input errors") {
  CHECK(run({"fmolp"}) == 2);
  CHECK(run({"fmolp", "solve"}) == 2);
  CHECK(run({"fmolp", "frobnicate", "x.json"}) == 2);
}

TEST_CASE("solve picks the fuzzy mode for fuzzy content and writes a document") {
  const std::string file = write_case_study_file("cli_solve.json");
  std::string out;
  CHECK(run({"fmolp", "solve", file, "--json", "cli_solve_out.json"}, &out) == 0);
  CHECK(out.find("alpha") != std::string::npos);

  const auto doc = nlohmann::json::parse(slurp("cli_solve_out.json"));
  CHECK(doc["mode"] == "fuzzy");
  CHECK(doc["status"] == "ok");
  CHECK(doc["solution"]["alpha"].get<double>() >= 0.80);

  std::remove("cli_solve.json");
  std::remove("cli_solve_out.json");
}

TEST_CASE("each named mode runs") {
  const std::string file = write_case_study_file("cli_modes.json");
  for (const std::string mode : {"maxmin", "augmented", "two-phase", "fuzzy"})
    CHECK(run({"fmolp", "solve", file, "--mode", mode}) == 0);
  // Goal mode is blocked by the 0.80 floor over the crisp region: solver
  // reports it, exit code 1.
  CHECK(run({"fmolp", "solve", file, "--mode", "goal"}) == 1);
  CHECK(run({"fmolp", "solve", file, "--mode", "bogus"}) == 2);
  std::remove("cli_modes.json");
}

TEST_CASE("identical invocations differ only in the wall-time field") {
  const std::string file = write_case_study_file("cli_det.json");
  CHECK(run({"fmolp", "solve", file, "--json", "cli_det_a.json"}) == 0);
  CHECK(run({"fmolp", "solve", file, "--json", "cli_det_b.json"}) == 0);
  CHECK(strip_wall_time(slurp("cli_det_a.json")) == strip_wall_time(slurp("cli_det_b.json")));
  std::remove("cli_det.json");
  std::remove("cli_det_a.json");
  std::remove("cli_det_b.json");
}

TEST_CASE("sweep emits steps+1 ascending rows") {
  const std::string file = write_case_study_file("cli_sweep.json");
  std::string out;
  CHECK(run({"fmolp", "sweep", file, "--alpha-from", "0.8", "--alpha-to", "1.0", "--steps", "4",
             "--json", "cli_sweep_out.json"},
            &out) == 0);
  const auto doc = nlohmann::json::parse(slurp("cli_sweep_out.json"));
  REQUIRE(doc["rows"].size() == 5);
  double last = -1.0;
  for (const auto& row : doc["rows"]) {
    const double a = row["alpha"].get<double>();
    CHECK(a > last);
    last = a;
  }
  CHECK(doc["rows"][0]["feasible"] == true);
  CHECK(doc["rows"][4]["feasible"] == false);

  CHECK(run({"fmolp", "sweep", file, "--alpha-from", "0.9", "--alpha-to", "0.1"}) == 2);
  std::remove("cli_sweep.json");
  std::remove("cli_sweep_out.json");
}

TEST_CASE("case-study subcommand reproduces the tables and exports CSV") {
  std::string out;
  CHECK(run({"fmolp", "case-study", "--csv", "cli_cs.csv"}, &out) == 0);
  CHECK(out.find("FAIL") == std::string::npos);
  CHECK(out.find("expected-mismatch") != std::string::npos);

  const std::string csv = slurp("cli_cs.csv");
  int lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 4);  // header + 3 data rows
  std::remove("cli_cs.csv");
}

TEST_CASE("narrative variant reports its infeasibility") {
  std::string err;
  CHECK(run({"fmolp", "case-study", "--variant", "narrative"}, nullptr, &err) == 1);
  CHECK(err.find("infeasible") != std::string::npos);
  CHECK(run({"fmolp", "case-study", "--variant", "bogus"}) == 2);
}
