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

#ifndef FMOLP_CLI_HPP_
#define FMOLP_CLI_HPP_

#include <string>
#include <vector>

namespace fmolp::cli {

// Exit codes: 0 success, 1 solver-reported non-success (infeasible,
// unbounded, ...), 2 input error, 3 internal error.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);  // args[0] is the program name

}  // namespace fmolp::cli

#endif  // FMOLP_CLI_HPP_
