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
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "bee/rowset.hpp"
#include "bee/table.hpp"

namespace bee {

/// A candidate sub-table of the output example.
struct Hypothesis {
  RowSet rows;
  std::int64_t score = 0;
  std::string provenance;
};

/// Materializes the rows of `output` selected by `rows`.
Table subtable(const Table& output, const RowSet& rows);

/// Per-cell feasibility of the concat criterion: can the string be covered,
/// greedily by longest match, with substrings of the string fields of a single
/// input row?
class ConcatCoverage {
 public:
  ConcatCoverage(const Table& output, const std::vector<Table>& inputs);
  bool coverable(std::size_t row, std::size_t col) const { return cells_[row][col]; }

  static bool greedy_cover(const std::string& value, const std::vector<std::string>& fields);

 private:
  std::vector<std::vector<bool>> cells_;
};

/// Consistency score: for each column, one point each for being constant, for
/// holding distinct consecutive integers, and for every string being
/// concat-coverable; the sum is multiplied by the row count.
std::int64_t score_subtable(const Table& output, const RowSet& rows, const ConcatCoverage& coverage);

/// Candidate pool: the whole table, per-column value groups, consecutive
/// integer runs, concat-coverable groups, pairwise intersections of those, and
/// complements of everything, plus any `extra` row sets. Deduplicated; empty
/// sets are dropped.
std::vector<Hypothesis> hypothesis_pool(const Table& output, const ConcatCoverage& coverage,
                                        const std::vector<RowSet>& extra = {});

/// Emits hypotheses by descending score, then descending size, then
/// lexicographic row order, up to a bound. Hypotheses already matched (in this
/// or an earlier generator) are skipped.
class HypothesisGenerator {
 public:
  using Feasible = std::function<bool(const RowSet&)>;

  HypothesisGenerator(std::vector<Hypothesis> pool, int bound, std::vector<RowSet> matched,
                      std::function<std::int64_t(const RowSet&)> scorer, Feasible feasible = {});

  std::optional<Hypothesis> next();

  /// Demotes pending subsets of `matched` behind everything else and moves
  /// the complement of `matched` (and of all matches so far) to the front.
  void update_rank(const RowSet& matched);

  int emitted() const { return emitted_; }

 private:
  void promote(const RowSet& rows, const std::string& provenance);

  std::deque<Hypothesis> front_;
  std::vector<Hypothesis> pending_;
  std::size_t cursor_ = 0;
  int bound_;
  int emitted_ = 0;
  std::vector<RowSet> matched_;
  std::unordered_set<RowSet> seen_;
  std::function<std::int64_t(const RowSet&)> scorer_;
  Feasible feasible_;
};

/// Sort order used by the generator.
bool hypothesis_before(const Hypothesis& a, const Hypothesis& b);

}  // namespace bee
