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
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bee/dsl.hpp"
#include "bee/rowset.hpp"
#include "bee/synth_task.hpp"
#include "bee/table.hpp"

namespace bee {

/// Origin of a column: (input table, input column), or nullopt for columns
/// computed by GroupJoin/Order.
using Lineage = std::optional<std::pair<std::string, std::string>>;

/// A table reachable from the inputs, with the statement that produced it.
struct ForwardEntry {
  std::optional<TransformStmt> stmt;  // empty for input tables
  Table table;
  int depth = 0;
  std::vector<Lineage> lineage;
  /// Sorted distinct values per column.
  std::vector<std::vector<Value>> distinct;
};

/// A predicate together with the rows it selects.
struct MaskedPredicate {
  Predicate predicate;
  RowSet mask;
};

/// Filter predicates with exactly `size` symbols over `table`, one per
/// distinct selected row set. Row sets that are empty, select every row, or are
/// reachable with fewer symbols are omitted.
std::vector<MaskedPredicate> filter_predicates(const Table& table, int size,
                                               const std::vector<Value>& constants);

struct ForwardOptions {
  int groupjoin_max_aggs = 2;
  std::size_t max_tables = 20000;
  bool merge_equivalent = true;
};

/// The growing set of forward tables, deduplicated by content.
class ForwardSet {
 public:
  ForwardSet(const std::vector<Table>& inputs, std::vector<Value> constants, ForwardOptions options = {});

  /// Adds every table whose depth is exactly `depth`. Entries of smaller depth
  /// must already be present.
  void expand(int depth, const Deadline* deadline = nullptr);

  const std::vector<ForwardEntry>& entries() const { return entries_; }
  const ForwardEntry& operator[](std::size_t i) const { return entries_[i]; }
  std::size_t size() const { return entries_.size(); }
  std::optional<std::size_t> find_content(const Table& table) const;
  std::optional<std::size_t> find_name(const std::string& name) const;

  /// Transform statements needed to build entry `i`, in dependency order.
  std::vector<TransformStmt> derivation(std::size_t i) const;

 private:
  bool add(TransformStmt stmt, Table table, int depth, std::vector<Lineage> lineage);
  std::string fresh_name();
  bool full() const { return entries_.size() >= options_.max_tables; }

  void expand_filters(int depth, const Deadline* deadline, bool focused);
  void expand_joins(int depth, const Deadline* deadline);
  void expand_groupjoins(int depth, const Deadline* deadline);
  void expand_orders(int depth, const Deadline* deadline);

  std::vector<ForwardEntry> entries_;
  std::vector<Value> constants_;
  ForwardOptions options_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash_;
  std::unordered_map<std::string, std::size_t> by_name_;
  std::size_t next_name_ = 1;
};

}  // namespace bee
