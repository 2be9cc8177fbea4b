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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bee/features.hpp"
#include "bee/table.hpp"
#include "bee/value.hpp"

namespace bee {

// ---------------------------------------------------------------------------
// Predicates

enum class PredicateSymbol {
  IntEq,
  IntLt,
  IntLeq,
  IntGt,
  IntGeq,
  StrEq,
  IsSubstring,
  StartsWith,
  EndsWith,
  IsOdd,
  IsEven,
};

/// Program-text name: intEq, isSubstring, isOdd, ...
std::string_view symbol_name(PredicateSymbol symbol);
std::optional<PredicateSymbol> symbol_from_name(std::string_view name);
/// 1 for IsOdd/IsEven, 2 otherwise.
int symbol_arity(PredicateSymbol symbol);
/// Int for comparisons and parity, Str for string symbols.
ColumnType symbol_operand_type(PredicateSymbol symbol);

struct ColumnRef {
  std::string name;
  friend bool operator==(const ColumnRef&, const ColumnRef&) = default;
  friend auto operator<=>(const ColumnRef&, const ColumnRef&) = default;
};

using Operand = std::variant<ColumnRef, Value>;

/// One predicate symbol applied to a column and, for binary symbols, a second
/// column or a constant.
struct SymbolApp {
  PredicateSymbol symbol = PredicateSymbol::IsOdd;
  std::string column;
  std::optional<Operand> operand;

  friend bool operator==(const SymbolApp&, const SymbolApp&) = default;
};

struct Predicate {
  enum class Kind { Leaf, And, Or, Not };

  Kind kind = Kind::Leaf;
  SymbolApp leaf;                  // Leaf only
  std::vector<Predicate> children;  // two for And/Or, one for Not

  static Predicate atom(SymbolApp app);
  static Predicate conj(Predicate a, Predicate b);
  static Predicate disj(Predicate a, Predicate b);
  static Predicate negate(Predicate p);

  /// Number of predicate symbols (leaves).
  int size() const;

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

// ---------------------------------------------------------------------------
// Statements

enum class Aggregate { Max, Min, Sum, Avg, Cnt };

std::string_view aggregate_name(Aggregate agg);
std::optional<Aggregate> aggregate_from_name(std::string_view name);

struct AggSpec {
  Aggregate agg = Aggregate::Cnt;
  std::string column;
  friend bool operator==(const AggSpec&, const AggSpec&) = default;
};

struct FilterOp {
  std::string source;
  Predicate predicate;
  friend bool operator==(const FilterOp&, const FilterOp&) = default;
};

struct JoinOp {
  std::string left;
  std::string right;
  std::string left_column;
  std::string right_column;
  friend bool operator==(const JoinOp&, const JoinOp&) = default;
};

struct GroupJoinOp {
  std::string source;
  std::string index;
  std::vector<AggSpec> aggs;
  friend bool operator==(const GroupJoinOp&, const GroupJoinOp&) = default;
};

struct OrderOp {
  std::string source;
  std::string column;
  std::int64_t start = 0;
  bool inverse = false;
  std::optional<std::string> index;
  friend bool operator==(const OrderOp&, const OrderOp&) = default;
};

using TransformOp = std::variant<FilterOp, JoinOp, GroupJoinOp, OrderOp>;

struct TransformStmt {
  std::string target;
  TransformOp op;
  friend bool operator==(const TransformStmt&, const TransformStmt&) = default;
};

/// Tables a transform reads, in operand order.
std::vector<std::string> transform_sources(const TransformOp& op);
/// Forward-search depth contributed by the operator itself: the predicate
/// size for Filter, 1 for everything else.
int op_depth(const TransformOp& op);

struct ColProj {
  std::string column;
  friend bool operator==(const ColProj&, const ColProj&) = default;
};
struct ConstProj {
  Value value;
  friend bool operator==(const ConstProj&, const ConstProj&) = default;
};
struct MutateProj {
  FeatureInstance feature;
  std::vector<std::string> columns;
  friend bool operator==(const MutateProj&, const MutateProj&) = default;
};

using Projection = std::variant<ColProj, ConstProj, MutateProj>;

struct MappingStmt {
  std::string source;
  std::vector<Projection> projections;
  friend bool operator==(const MappingStmt&, const MappingStmt&) = default;
};

struct Program {
  std::vector<TransformStmt> transforms;
  std::vector<MappingStmt> mappings;
  friend bool operator==(const Program&, const Program&) = default;
};

/// An action and its typed arguments. The output table schema is
/// <action:Str, arg1, ..., argn>.
struct ActionSignature {
  std::string name;
  std::vector<Column> args;

  Schema output_schema() const;
  friend bool operator==(const ActionSignature&, const ActionSignature&) = default;
};

// ---------------------------------------------------------------------------
// Result schemas of the table operators

/// Left columns then right columns; colliding names are prefixed with
/// "<table>." on both sides.
Schema join_schema(const std::string& left_name, const Schema& left,
                   const std::string& right_name, const Schema& right);
/// Fresh column name "<base>", or "<base>_2", "<base>_3", ... on collision.
std::string fresh_column_name(const Schema& schema, const std::string& base);
Schema groupjoin_schema(const Schema& source, const std::vector<AggSpec>& aggs);
Schema order_schema(const Schema& source, const std::string& column);

}  // namespace bee
