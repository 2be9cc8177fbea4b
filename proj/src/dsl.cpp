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

#include "bee/dsl.hpp"

#include <array>
#include <set>
#include <utility>

#include "bee/error.hpp"

namespace bee {

namespace {

constexpr std::array<std::pair<PredicateSymbol, std::string_view>, 11> kSymbolNames{{
    {PredicateSymbol::IntEq, "intEq"},
    {PredicateSymbol::IntLt, "intLt"},
    {PredicateSymbol::IntLeq, "intLeq"},
    {PredicateSymbol::IntGt, "intGt"},
    {PredicateSymbol::IntGeq, "intGeq"},
    {PredicateSymbol::StrEq, "strEq"},
    {PredicateSymbol::IsSubstring, "isSubstring"},
    {PredicateSymbol::StartsWith, "startsWith"},
    {PredicateSymbol::EndsWith, "endsWith"},
    {PredicateSymbol::IsOdd, "isOdd"},
    {PredicateSymbol::IsEven, "isEven"},
}};

constexpr std::array<std::pair<Aggregate, std::string_view>, 5> kAggNames{{
    {Aggregate::Max, "max"},
    {Aggregate::Min, "min"},
    {Aggregate::Sum, "sum"},
    {Aggregate::Avg, "avg"},
    {Aggregate::Cnt, "cnt"},
}};

}  // namespace

std::string_view symbol_name(PredicateSymbol symbol) {
  for (const auto& [s, n] : kSymbolNames) {
    if (s == symbol) return n;
  }
  return "?";
}

std::optional<PredicateSymbol> symbol_from_name(std::string_view name) {
  for (const auto& [s, n] : kSymbolNames) {
    if (n == name) return s;
  }
  return std::nullopt;
}

int symbol_arity(PredicateSymbol symbol) {
  return symbol == PredicateSymbol::IsOdd || symbol == PredicateSymbol::IsEven ? 1 : 2;
}

ColumnType symbol_operand_type(PredicateSymbol symbol) {
  switch (symbol) {
    case PredicateSymbol::StrEq:
    case PredicateSymbol::IsSubstring:
    case PredicateSymbol::StartsWith:
    case PredicateSymbol::EndsWith:
      return ColumnType::Str;
    default:
      return ColumnType::Int;
  }
}

Predicate Predicate::atom(SymbolApp app) {
  Predicate p;
  p.kind = Kind::Leaf;
  p.leaf = std::move(app);
  return p;
}

Predicate Predicate::conj(Predicate a, Predicate b) {
  Predicate p;
  p.kind = Kind::And;
  p.children.push_back(std::move(a));
  p.children.push_back(std::move(b));
  return p;
}

Predicate Predicate::disj(Predicate a, Predicate b) {
  Predicate p;
  p.kind = Kind::Or;
  p.children.push_back(std::move(a));
  p.children.push_back(std::move(b));
  return p;
}

Predicate Predicate::negate(Predicate inner) {
  Predicate p;
  p.kind = Kind::Not;
  p.children.push_back(std::move(inner));
  return p;
}

int Predicate::size() const {
  if (kind == Kind::Leaf) return 1;
  int n = 0;
  for (const auto& c : children) n += c.size();
  return n;
}

std::string_view aggregate_name(Aggregate agg) {
  for (const auto& [a, n] : kAggNames) {
    if (a == agg) return n;
  }
  return "?";
}

std::optional<Aggregate> aggregate_from_name(std::string_view name) {
  for (const auto& [a, n] : kAggNames) {
    if (n == name) return a;
  }
  return std::nullopt;
}

std::vector<std::string> transform_sources(const TransformOp& op) {
  struct Visitor {
    std::vector<std::string> operator()(const FilterOp& f) const { return {f.source}; }
    std::vector<std::string> operator()(const JoinOp& j) const { return {j.left, j.right}; }
    std::vector<std::string> operator()(const GroupJoinOp& g) const { return {g.source}; }
    std::vector<std::string> operator()(const OrderOp& o) const { return {o.source}; }
  };
  return std::visit(Visitor{}, op);
}

int op_depth(const TransformOp& op) {
  if (const auto* f = std::get_if<FilterOp>(&op)) return f->predicate.size();
  return 1;
}

Schema ActionSignature::output_schema() const {
  std::vector<Column> cols;
  cols.push_back({"action", ColumnType::Str});
  cols.insert(cols.end(), args.begin(), args.end());
  return Schema(std::move(cols));
}

Schema join_schema(const std::string& left_name, const Schema& left,
                   const std::string& right_name, const Schema& right) {
  std::vector<Column> cols;
  for (const auto& c : left.columns()) {
    cols.push_back(right.contains(c.name) ? Column{left_name + "." + c.name, c.type} : c);
  }
  for (const auto& c : right.columns()) {
    cols.push_back(left.contains(c.name) ? Column{right_name + "." + c.name, c.type} : c);
  }
  // Prefixing can itself collide (e.g. both tables share a name); fall back to
  // numeric suffixes so the schema stays well-formed.
  std::set<std::string> used;
  for (auto& c : cols) {
    std::string name = c.name;
    for (int k = 2; used.count(name); ++k) name = c.name + "_" + std::to_string(k);
    c.name = name;
    used.insert(name);
  }
  return Schema(std::move(cols));
}

std::string fresh_column_name(const Schema& schema, const std::string& base) {
  if (!schema.contains(base)) return base;
  for (int k = 2;; ++k) {
    std::string name = base + "_" + std::to_string(k);
    if (!schema.contains(name)) return name;
  }
}

Schema groupjoin_schema(const Schema& source, const std::vector<AggSpec>& aggs) {
  Schema out = source;
  for (const auto& a : aggs) {
    std::vector<Column> cols = out.columns();
    cols.push_back({fresh_column_name(out, std::string(aggregate_name(a.agg)) + "_" + a.column),
                    ColumnType::Int});
    out = Schema(std::move(cols));
  }
  return out;
}

Schema order_schema(const Schema& source, const std::string& column) {
  std::vector<Column> cols = source.columns();
  cols.push_back({fresh_column_name(source, "ord_" + column), ColumnType::Int});
  return Schema(std::move(cols));
}

}  // namespace bee
