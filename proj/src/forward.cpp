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

#include "bee/forward.hpp"

#include <algorithm>
#include <set>

#include "bee/error.hpp"
#include "bee/interpreter.hpp"

namespace bee {

namespace {

RowSet to_rowset(const std::vector<bool>& bits) {
  RowSet s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) s.set(i);
  }
  return s;
}

Predicate leaf(PredicateSymbol symbol, const std::string& column, std::optional<Operand> operand = {}) {
  return Predicate::atom(SymbolApp{symbol, column, std::move(operand)});
}

// Single-symbol predicates in enumeration order: atoms first, then their
// negations.
std::vector<Predicate> atoms(const Table& table, const std::vector<Value>& constants) {
  std::vector<std::string> ints;
  std::vector<std::string> strs;
  for (const auto& c : table.schema().columns()) {
    if (c.type == ColumnType::Int) ints.push_back(c.name);
    if (c.type == ColumnType::Str) strs.push_back(c.name);
  }
  constexpr PredicateSymbol kCompare[] = {PredicateSymbol::IntEq, PredicateSymbol::IntLt, PredicateSymbol::IntLeq,
                                          PredicateSymbol::IntGt, PredicateSymbol::IntGeq};
  constexpr PredicateSymbol kString[] = {PredicateSymbol::StrEq, PredicateSymbol::IsSubstring,
                                         PredicateSymbol::StartsWith, PredicateSymbol::EndsWith};
  std::vector<Predicate> out;
  for (const auto& c : ints) {
    out.push_back(leaf(PredicateSymbol::IsOdd, c));
    out.push_back(leaf(PredicateSymbol::IsEven, c));
  }
  for (const auto& c : ints) {
    for (const auto& k : constants) {
      if (!k.is_int()) continue;
      for (auto s : kCompare) out.push_back(leaf(s, c, Operand{k}));
    }
  }
  for (std::size_t i = 0; i < ints.size(); ++i) {
    for (std::size_t j = i + 1; j < ints.size(); ++j) {
      for (auto s : kCompare) out.push_back(leaf(s, ints[i], Operand{ColumnRef{ints[j]}}));
    }
  }
  for (const auto& c : strs) {
    for (const auto& k : constants) {
      if (!k.is_str()) continue;
      for (auto s : kString) out.push_back(leaf(s, c, Operand{k}));
    }
  }
  for (std::size_t i = 0; i < strs.size(); ++i) {
    for (std::size_t j = 0; j < strs.size(); ++j) {
      if (i == j) continue;
      if (i < j) out.push_back(leaf(PredicateSymbol::StrEq, strs[i], Operand{ColumnRef{strs[j]}}));
      for (auto s : {PredicateSymbol::IsSubstring, PredicateSymbol::StartsWith, PredicateSymbol::EndsWith}) {
        out.push_back(leaf(s, strs[i], Operand{ColumnRef{strs[j]}}));
      }
    }
  }
  std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back(Predicate::negate(out[i]));
  return out;
}

bool same_values(const Table& t, std::size_t a, std::size_t b) {
  for (const auto& r : t.rows()) {
    if (r[a] != r[b]) return false;
  }
  return true;
}

bool constant_column(const Table& t, std::size_t c) {
  for (const auto& r : t.rows()) {
    if (r[c] != t.rows().front()[c]) return false;
  }
  return true;
}

// True when column `c` (appended last) is constant or duplicates another
// column of `t`.
bool redundant_column(const Table& t, std::size_t c) {
  if (t.empty() || constant_column(t, c)) return true;
  for (std::size_t k = 0; k < c; ++k) {
    if (t.schema()[k].type == t.schema()[c].type && same_values(t, k, c)) return true;
  }
  return false;
}

}  // namespace

std::vector<MaskedPredicate> filter_predicates(const Table& table, int size, const std::vector<Value>& constants) {
  if (size < 1 || table.empty()) return {};
  const std::size_t n = table.row_count();
  std::set<RowSet> seen;
  seen.insert(RowSet(n));
  seen.insert(RowSet::full(n));

  std::vector<MaskedPredicate> level;
  for (auto& p : atoms(table, constants)) {
    RowSet mask = to_rowset(predicate_mask(table, p));
    if (seen.insert(mask).second) level.push_back({std::move(p), std::move(mask)});
  }
  if (size == 1) return level;
  const std::vector<MaskedPredicate> base = level;
  for (int k = 2; k <= size; ++k) {
    std::vector<MaskedPredicate> next;
    for (std::size_t i = 0; i < level.size(); ++i) {
      // Pairs of atoms are unordered; larger predicates extend every
      // (k-1)-symbol predicate by one atom.
      std::size_t start = k == 2 ? i + 1 : 0;
      for (std::size_t j = start; j < base.size(); ++j) {
        RowSet conj = level[i].mask & base[j].mask;
        if (seen.insert(conj).second) {
          next.push_back({Predicate::conj(level[i].predicate, base[j].predicate), std::move(conj)});
        }
        RowSet disj = level[i].mask | base[j].mask;
        if (seen.insert(disj).second) {
          next.push_back({Predicate::disj(level[i].predicate, base[j].predicate), std::move(disj)});
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

ForwardSet::ForwardSet(const std::vector<Table>& inputs, std::vector<Value> constants, ForwardOptions options)
    : constants_(std::move(constants)), options_(options) {
  for (const auto& t : inputs) {
    std::vector<Lineage> lineage;
    for (const auto& c : t.schema().columns()) lineage.emplace_back(std::make_pair(t.name(), c.name));
    ForwardEntry e{std::nullopt, t, 0, std::move(lineage), {}};
    for (std::size_t c = 0; c < t.column_count(); ++c) {
      auto vals = t.column_values(c);
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      e.distinct.push_back(std::move(vals));
    }
    by_hash_[t.content_hash()].push_back(entries_.size());
    by_name_[t.name()] = entries_.size();
    entries_.push_back(std::move(e));
  }
}

std::string ForwardSet::fresh_name() {
  while (true) {
    std::string name = "s" + std::to_string(next_name_++);
    if (!by_name_.count(name)) return name;
  }
}

std::optional<std::size_t> ForwardSet::find_content(const Table& table) const {
  auto it = by_hash_.find(table.content_hash());
  if (it == by_hash_.end()) return std::nullopt;
  for (auto i : it->second) {
    if (entries_[i].table == table) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> ForwardSet::find_name(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

bool ForwardSet::add(TransformStmt stmt, Table table, int depth, std::vector<Lineage> lineage) {
  if (table.empty() || full()) return false;
  if (options_.merge_equivalent && find_content(table)) return false;
  ForwardEntry e{std::move(stmt), std::move(table), depth, std::move(lineage), {}};
  for (std::size_t c = 0; c < e.table.column_count(); ++c) {
    auto vals = e.table.column_values(c);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    e.distinct.push_back(std::move(vals));
  }
  std::size_t idx = entries_.size();
  by_hash_[e.table.content_hash()].push_back(idx);
  by_name_[e.stmt->target] = idx;
  entries_.push_back(std::move(e));
  return true;
}

void ForwardSet::expand(int depth, const Deadline* deadline) {
  if (depth < 1) return;
  expand_filters(depth, deadline, true);
  expand_filters(depth, deadline, false);
  expand_joins(depth, deadline);
  expand_groupjoins(depth, deadline);
  expand_orders(depth, deadline);
}

namespace {

void collect_columns(const Predicate& p, std::vector<std::string>& out) {
  if (p.kind != Predicate::Kind::Leaf) {
    for (const auto& c : p.children) collect_columns(c, out);
    return;
  }
  out.push_back(p.leaf.column);
  if (p.leaf.operand) {
    if (const auto* ref = std::get_if<ColumnRef>(&*p.leaf.operand)) out.push_back(ref->name);
  }
}

// Columns a derived table adds over its source: aggregates and ranks. Joins
// count as wholly new.
std::optional<std::vector<std::string>> new_columns(const ForwardEntry& e) {
  if (!e.stmt) return std::nullopt;
  const Schema& schema = e.table.schema();
  std::vector<std::string> out;
  if (const auto* gj = std::get_if<GroupJoinOp>(&e.stmt->op)) {
    for (std::size_t k = schema.size() - gj->aggs.size(); k < schema.size(); ++k) out.push_back(schema[k].name);
  } else if (std::holds_alternative<OrderOp>(e.stmt->op)) {
    out.push_back(schema[schema.size() - 1].name);
  } else if (std::holds_alternative<JoinOp>(e.stmt->op)) {
    for (const auto& c : schema.columns()) out.push_back(c.name);
  } else {
    return std::nullopt;
  }
  return out;
}

}  // namespace

// The focused pass runs first: single-atom filters over derived tables that
// read a column the derivation introduced. With the table cap, this keeps
// the many plain multi-atom filters from crowding them out.
void ForwardSet::expand_filters(int depth, const Deadline* deadline, bool focused) {
  // Smaller predicates first, so deeper sources are not starved by the cap.
  std::vector<std::size_t> sources(entries_.size());
  for (std::size_t i = 0; i < sources.size(); ++i) sources[i] = i;
  std::stable_sort(sources.begin(), sources.end(),
                   [&](std::size_t a, std::size_t b) { return entries_[a].depth > entries_[b].depth; });
  for (auto i : sources) {
    if (full()) return;
    if (deadline) deadline->check();
    int size = depth - entries_[i].depth;
    if (size < 1) continue;
    // Filter(Filter(t, p), q) is Filter(t, and(p, q)) at the same depth.
    if (entries_[i].stmt && std::holds_alternative<FilterOp>(entries_[i].stmt->op)) continue;
    std::optional<std::vector<std::string>> fresh;
    if (focused) {
      fresh = new_columns(entries_[i]);
      if (size != 1 || !fresh) continue;
    }
    // Copy: `entries_` may reallocate while adding.
    const Table source = entries_[i].table;
    const std::vector<Lineage> lineage = entries_[i].lineage;
    for (auto& mp : filter_predicates(source, size, constants_)) {
      if (fresh) {
        std::vector<std::string> used;
        collect_columns(mp.predicate, used);
        bool reads_new = std::any_of(used.begin(), used.end(), [&](const std::string& c) {
          return std::find(fresh->begin(), fresh->end(), c) != fresh->end();
        });
        if (!reads_new) continue;
      }
      std::vector<Row> rows;
      for (auto r : mp.mask.indices()) rows.push_back(source.rows()[r]);
      std::string name = fresh_name();
      Table t(name, source.schema(), std::move(rows));
      if (!add(TransformStmt{name, FilterOp{source.name(), std::move(mp.predicate)}}, std::move(t), depth, lineage)) {
        if (full()) return;
      }
    }
  }
}

void ForwardSet::expand_joins(int depth, const Deadline* deadline) {
  const std::size_t existing = entries_.size();
  for (std::size_t a = 0; a < existing && !full(); ++a) {
    if (deadline) deadline->check();
    for (std::size_t b = a + 1; b < existing && !full(); ++b) {
      if (std::max(entries_[a].depth, entries_[b].depth) + 1 != depth) continue;
      const Table left = entries_[a].table;
      const Table right = entries_[b].table;
      const auto la = entries_[a].lineage;
      const auto lb = entries_[b].lineage;
      for (std::size_t ca = 0; ca < left.column_count(); ++ca) {
        if (left.schema()[ca].type != ColumnType::Id) continue;
        for (std::size_t cb = 0; cb < right.column_count(); ++cb) {
          if (right.schema()[cb].type != ColumnType::Id) continue;
          if (la[ca] && la[ca] == lb[cb]) continue;
          std::string name = fresh_name();
          Table t = exec_join(left, right, left.schema()[ca].name, right.schema()[cb].name, name);
          std::vector<Lineage> lineage = la;
          lineage.insert(lineage.end(), lb.begin(), lb.end());
          add(TransformStmt{name, JoinOp{left.name(), right.name(), left.schema()[ca].name, right.schema()[cb].name}},
              std::move(t), depth, std::move(lineage));
        }
      }
    }
  }
}

void ForwardSet::expand_groupjoins(int depth, const Deadline* deadline) {
  const std::size_t existing = entries_.size();
  for (std::size_t i = 0; i < existing && !full(); ++i) {
    if (entries_[i].depth + 1 != depth) continue;
    if (deadline) deadline->check();
    const Table source = entries_[i].table;
    const auto lineage = entries_[i].lineage;
    const Schema& schema = source.schema();
    for (std::size_t idx = 0; idx < schema.size() && !full(); ++idx) {
      // Candidate aggregates that add information: not constant and not equal
      // to an existing or earlier column.
      std::vector<AggSpec> options;
      for (std::size_t c = 0; c < schema.size(); ++c) {
        if (schema[c].type != ColumnType::Int) continue;
        for (auto agg : {Aggregate::Max, Aggregate::Min, Aggregate::Sum, Aggregate::Avg}) {
          options.push_back({agg, schema[c].name});
        }
      }
      options.push_back({Aggregate::Cnt, schema[idx].name});
      std::vector<AggSpec> kept;
      std::vector<std::vector<Value>> kept_values;
      for (const auto& opt : options) {
        Table t = exec_groupjoin(source, schema[idx].name, {opt}, "tmp");
        std::size_t c = t.column_count() - 1;
        if (redundant_column(t, c)) continue;
        auto vals = t.column_values(c);
        if (std::find(kept_values.begin(), kept_values.end(), vals) != kept_values.end()) continue;
        kept.push_back(opt);
        kept_values.push_back(std::move(vals));
      }
      auto emit = [&](std::vector<AggSpec> aggs) {
        std::string name = fresh_name();
        Table t = exec_groupjoin(source, schema[idx].name, aggs, name);
        std::vector<Lineage> lin = lineage;
        lin.resize(t.column_count());
        add(TransformStmt{name, GroupJoinOp{source.name(), schema[idx].name, std::move(aggs)}}, std::move(t), depth,
            std::move(lin));
      };
      for (std::size_t a = 0; a < kept.size() && !full(); ++a) emit({kept[a]});
      if (options_.groupjoin_max_aggs >= 2) {
        for (std::size_t a = 0; a < kept.size() && !full(); ++a) {
          for (std::size_t b = a + 1; b < kept.size() && !full(); ++b) emit({kept[a], kept[b]});
        }
      }
    }
  }
}

void ForwardSet::expand_orders(int depth, const Deadline* deadline) {
  const std::size_t existing = entries_.size();
  for (std::size_t i = 0; i < existing && !full(); ++i) {
    if (entries_[i].depth + 1 != depth) continue;
    if (deadline) deadline->check();
    const Table source = entries_[i].table;
    const auto lineage = entries_[i].lineage;
    const Schema& schema = source.schema();
    std::vector<std::vector<Value>> produced;
    for (std::size_t c = 0; c < schema.size() && !full(); ++c) {
      if (schema[c].type == ColumnType::Id) continue;
      std::vector<std::optional<std::string>> indexes{std::nullopt};
      for (std::size_t k = 0; k < schema.size(); ++k) {
        if (k != c) indexes.emplace_back(schema[k].name);
      }
      for (const auto& index : indexes) {
        std::string name = fresh_name();
        Table t = exec_order(source, schema[c].name, 0, false, index, name);
        std::size_t rc = t.column_count() - 1;
        if (redundant_column(t, rc)) continue;
        auto vals = t.column_values(rc);
        if (std::find(produced.begin(), produced.end(), vals) != produced.end()) continue;
        produced.push_back(std::move(vals));
        std::vector<Lineage> lin = lineage;
        lin.resize(t.column_count());
        add(TransformStmt{name, OrderOp{source.name(), schema[c].name, 0, false, index}}, std::move(t), depth,
            std::move(lin));
      }
    }
  }
}

std::vector<TransformStmt> ForwardSet::derivation(std::size_t i) const {
  std::set<std::size_t> needed;
  std::vector<std::size_t> stack{i};
  while (!stack.empty()) {
    std::size_t k = stack.back();
    stack.pop_back();
    if (!entries_[k].stmt || !needed.insert(k).second) continue;
    for (const auto& src : transform_sources(entries_[k].stmt->op)) {
      auto it = by_name_.find(src);
      if (it == by_name_.end()) throw InternalError("forward table '" + src + "' is missing");
      stack.push_back(it->second);
    }
  }
  std::vector<TransformStmt> out;
  for (auto k : needed) out.push_back(*entries_[k].stmt);
  return out;
}

}  // namespace bee
