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

#ifndef FMOLP_STATUS_HPP_
#define FMOLP_STATUS_HPP_

#include <optional>
#include <string>
#include <utility>

namespace fmolp {

// Expected, reportable outcomes of a solve. Programming errors (dimension
// mismatches, non-finite inputs) throw std::invalid_argument instead.
enum class Status {
  Ok,
  InfeasibleProblem,
  UnboundedObjective,
  InfeasibleAtAlphaLower,
  DegenerateRamp,
  NoFuzzyContent,
  AllZeroWeights,
  ZeroBestValue,
  MissingGoal,
};

const char* to_string(Status s);

template <typename T>
struct Result {
  Status status = Status::Ok;
  std::optional<T> value;
  std::string message;

  bool ok() const { return status == Status::Ok; }
  explicit operator bool() const { return ok(); }
  const T& operator*() const { return *value; }
  T& operator*() { return *value; }
  const T* operator->() const { return &*value; }
  T* operator->() { return &*value; }

  static Result success(T v) {
    Result r;
    r.value = std::move(v);
    return r;
  }
  static Result failure(Status s, std::string msg) {
    Result r;
    r.status = s;
    r.message = std::move(msg);
    return r;
  }
};

}  // namespace fmolp

#endif  // FMOLP_STATUS_HPP_
