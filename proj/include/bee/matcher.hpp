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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bee/dsl.hpp"
#include "bee/feature_solvers.hpp"
#include "bee/forward.hpp"
#include "bee/synth_task.hpp"
#include "bee/table.hpp"

namespace bee {

/// A feature family applied to base columns, with parameters still free.
struct SymbolicColumn {
  FeatureFamily family;
  std::vector<std::size_t> inputs;  // base column positions
  friend bool operator==(const SymbolicColumn&, const SymbolicColumn&) = default;
};

/// A forward table extended with the constants the hypothesis needs and with
/// parameter-symbolic feature columns.
struct AbstractTable {
  const Table* base = nullptr;
  std::vector<Value> constants;
  std::vector<SymbolicColumn> symbolic;
};

/// Constant columns for every single-valued, non-Id hypothesis column, and one
/// symbolic column per (family, type-compatible inputs): Linear/Div/Mod per
/// Int column, Sum per Int pair, Substring per Str column, and one Concat over
/// all Str columns.
AbstractTable build_abstract_table(const Table& base, const Table& hypothesis);

/// Memoizes solver calls on identical evidence.
class SolverCache {
 public:
  explicit SolverCache(bool enabled = true) : enabled_(enabled) {}

  std::optional<FeatureInstance> solve(FeatureFamily family, const std::vector<FeatureExample>& examples,
                                       const SolverLimits& limits);

  std::size_t calls() const { return calls_; }
  std::size_t hits() const { return hits_; }

 private:
  bool enabled_;
  std::size_t calls_ = 0;
  std::size_t hits_ = 0;
  std::map<std::pair<int, std::vector<Value>>, std::optional<FeatureInstance>> memo_;
};

/// Where one hypothesis column comes from.
struct ColumnChoice {
  enum class Kind { Base, Constant, Feature };
  Kind kind = Kind::Constant;
  std::size_t base_column = 0;  // Base
  Value constant;               // Constant
  std::optional<FeatureInstance> feature;
  std::vector<std::size_t> feature_inputs;  // Feature
};

struct MatchResult {
  std::vector<std::size_t> row_map;  // base row -> hypothesis row
  std::vector<ColumnChoice> columns;  // per hypothesis column
  MappingStmt mapping;
};

struct MatchOptions {
  SolverLimits limits;
  int row_map_cap = 512;
  bool allow_features = true;
  const Deadline* deadline = nullptr;
};

/// Solves the matching constraint between `hypothesis` (rows of the output
/// example) and one forward table. The returned Yield, executed on `base`,
/// reproduces `hypothesis` exactly.
std::optional<MatchResult> match_table(const Table& hypothesis, const ForwardEntry& base,
                                       const ActionSignature& action, SolverCache& cache,
                                       const MatchOptions& options);

/// Tries forward tables in order, first with plain column copies and
/// constants only, then with features; the first success wins.
struct ForwardMatch {
  std::size_t entry = 0;
  MatchResult result;
};
std::optional<ForwardMatch> match_hypothesis(const Table& hypothesis, const ForwardSet& forward,
                                             const ActionSignature& action, SolverCache& cache,
                                             const MatchOptions& options);

}  // namespace bee
