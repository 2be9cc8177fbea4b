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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "bee/dsl.hpp"
#include "bee/table.hpp"

namespace bee {

/// Defined tables during execution, keyed by name.
using ExecState = std::map<std::string, Table>;

/// Evaluates a predicate on one row. Throws ValidityError for unknown columns
/// or ill-typed operands.
bool eval_predicate(const Predicate& predicate, const Table& table, std::size_t row);

/// Per-row truth values of the predicate, in canonical row order.
std::vector<bool> predicate_mask(const Table& table, const Predicate& predicate);

Table exec_filter(const Table& table, const Predicate& predicate, std::string target);
Table exec_join(const Table& left, const Table& right, const std::string& left_column,
                const std::string& right_column, std::string target);
Table exec_groupjoin(const Table& table, const std::string& index,
                     const std::vector<AggSpec>& aggs, std::string target);
Table exec_order(const Table& table, const std::string& column, std::int64_t start, bool inverse,
                 const std::optional<std::string>& index, std::string target);

/// Runs one transform statement against the state; returns the new table.
Table exec_transform(const ExecState& state, const TransformStmt& stmt);

/// Evaluates the projections over the source rows, deduplicates, and names the
/// columns after the action signature.
Table exec_yield(const ExecState& state, const MappingStmt& stmt, const ActionSignature& action);
Table exec_yield(const Table& source, const MappingStmt& stmt, const ActionSignature& action);

/// Validates the program first (ValidityError naming the statement index on
/// failure), then executes transforms in order and unions all Yield results.
Table exec_program(const Program& program, std::span<const Table> inputs,
                   const ActionSignature& action);

}  // namespace bee
