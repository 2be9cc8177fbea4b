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

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bee/dsl.hpp"
#include "bee/forward.hpp"
#include "bee/rowset.hpp"
#include "bee/synth_task.hpp"
#include "bee/table.hpp"

namespace bee {

enum class SynthOutcome { Solved, Timeout, Exhausted };

std::string_view to_string(SynthOutcome outcome);

struct SynthStats {
  std::int64_t elapsed_ms = 0;
  std::size_t forward_tables = 0;
  std::size_t hypotheses_tried = 0;
  std::size_t matches_solved = 0;
  SearchMode mode = SearchMode::Bidirectional;
};

struct SynthResult {
  SynthOutcome outcome = SynthOutcome::Exhausted;
  std::optional<Program> program;  // set iff solved
  SynthStats stats;
};

/// Runs the search selected by task.settings.mode. A returned program always
/// validates and reproduces task.output on task.inputs.
SynthResult synthesize(const SynthTask& task);
SynthResult synthesize_bidirectional(const SynthTask& task);
/// Baseline without backward search: every forward table is matched against
/// subsets of the output in decreasing size, then covered exactly.
SynthResult synthesize_forward_only(const SynthTask& task);

/// A hypothesis that matched, and the Yield that produces it.
struct MatchedHypothesis {
  RowSet rows;
  std::int64_t score = 0;
  std::size_t entry = 0;  // forward table index
  MappingStmt mapping;
};

/// Exact cover of all output rows by pairwise-disjoint matched hypotheses,
/// searched depth-first with higher scores first. Returns indices into
/// `matched`, or nullopt when no cover exists.
std::optional<std::vector<std::size_t>> assemble_mapping(const std::vector<MatchedHypothesis>& matched,
                                                         std::size_t output_rows);

/// Collects the transforms behind each Yield source, renames intermediate
/// tables to t1, t2, ..., and verifies the program on the inputs. Throws
/// InternalError if the program does not reproduce `output`.
Program assemble_program(const ForwardSet& forward, const std::vector<MappingStmt>& mappings,
                         const std::vector<std::size_t>& entries, const std::vector<Table>& inputs,
                         const Table& output, const ActionSignature& action);

}  // namespace bee
