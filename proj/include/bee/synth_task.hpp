/* Copyright 2026 The Bee Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bee/dsl.hpp"
#include "bee/feature_solvers.hpp"
#include "bee/table.hpp"

namespace bee {

enum class SearchMode { Bidirectional, ForwardOnly };

std::string_view to_string(SearchMode mode);

struct SynthSettings {
  int max_depth = 3;
  int hypothesis_bound = 20;
  std::chrono::milliseconds timeout{120000};
  SearchMode mode = SearchMode::Bidirectional;
  SolverLimits solver;
  /// Largest aggregate list per GroupJoin statement.
  int groupjoin_max_aggs = 2;
  /// Row maps tried per column assignment when rows are not pinned down by
  /// concrete columns.
  int row_map_cap = 512;
  /// Forward expansion stops adding tables beyond this many.
  std::size_t max_forward_tables = 20000;
  /// Merge forward tables with identical content.
  bool merge_equivalent_tables = true;
  /// Memoize feature-solver calls within a session.
  bool cache_solver_calls = true;
};

/// A synthesis problem: example inputs, the example action table, the action
/// it uses, and the constant pool available to predicates.
struct SynthTask {
  std::vector<Table> inputs;
  Table output;
  ActionSignature action;
  std::vector<Value> constants;
  SynthSettings settings;
};

/// Thrown internally when the time budget runs out.
struct TimeoutSignal {};

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget)
      : start_(std::chrono::steady_clock::now()), end_(start_ + budget) {}

  bool expired() const { return std::chrono::steady_clock::now() >= end_; }
  void check() const {
    if (expired()) throw TimeoutSignal{};
  }
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
  std::chrono::steady_clock::time_point end_;
};

}  // namespace bee
