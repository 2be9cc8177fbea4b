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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bee/features.hpp"

namespace bee {

/// Search bounds for the parameter solvers.
struct SolverLimits {
  int div_max_divisor = 100;
  int max_tokens = 3;
  int max_occurrence = 3;
  int concat_max_segments = 6;
};

using IntPair = std::pair<std::int64_t, std::int64_t>;
using IntTriple = std::array<std::int64_t, 3>;
using StrPair = std::pair<std::string, std::string>;

struct ConcatExample {
  std::vector<std::string> inputs;
  std::string output;
};

// Every solver returns nullopt for "unsat". Whenever a solver returns an
// instance, applying it reproduces every example exactly.

/// a and b from the first two pairs with distinct x; needs two distinct x.
std::optional<FeatureInstance> solve_linear(std::span<const IntPair> pairs);
/// (x, y, out) triples; b = out - x - y.
std::optional<FeatureInstance> solve_sum(std::span<const IntTriple> triples);
/// Smallest divisor in [2, limits.div_max_divisor], then smallest offset.
std::optional<FeatureInstance> solve_div(std::span<const IntPair> pairs,
                                         const SolverLimits& limits = {});
/// First (d, b1) in enumeration order d = 2..10, b1 = 0..d-1.
std::optional<FeatureInstance> solve_mod(std::span<const IntPair> pairs);
/// Fewest tokens, then occurrences 1..k before -1..-k, then class order.
std::optional<FeatureInstance> solve_substring(std::span<const StrPair> pairs,
                                               const SolverLimits& limits = {});
/// Segments each output into extracts and literals shared by every example.
/// Minimizes literal characters, then segment count. At least one segment
/// must be an extract; purely constant outputs are left to constant
/// projections.
std::optional<FeatureInstance> solve_concat(std::span<const ConcatExample> examples,
                                            const SolverLimits& limits = {});

/// One row of evidence for a feature column: argument values and the output
/// the feature must produce.
struct FeatureExample {
  std::vector<Value> inputs;
  Value output;

  friend bool operator==(const FeatureExample&, const FeatureExample&) = default;
};

/// Dispatches to the family's solver. Examples whose inputs repeat with
/// conflicting outputs are unsat; exact duplicates are collapsed.
std::optional<FeatureInstance> solve_feature(FeatureFamily family,
                                             std::span<const FeatureExample> examples,
                                             const SolverLimits& limits = {});

/// Candidate extract specs in ranking order, restricted to `alphabet`.
std::vector<ExtractSpec> ranked_extract_specs(std::span<const TokenClass> alphabet,
                                              const SolverLimits& limits);

}  // namespace bee
