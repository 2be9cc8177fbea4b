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

#include "bee/interpreter.hpp"

#include <algorithm>
#include <unordered_map>

#include "bee/error.hpp"
#include "bee/validate.hpp"

namespace bee {

namespace {

// Predicate with column names resolved to positions.
struct Compiled {
  Predicate::Kind kind;
  PredicateSymbol symbol{};
  std::size_t column = 0;
  bool operand_is_column = false;
  std::size_t operand_column = 0;
  Value constant;
  std::vector<Compiled> children;
};

std::size_t column_index(const Table& t, const std::string& name) {
  auto idx = t.schema().find(name);
  if (!idx) throw ValidityError("unknown column '" + name + "' in table '" + t.name() + "'");
  return *idx;
}

Compiled compile(const Predicate& p, const Table& t) {
  Compiled c;
  c.kind = p.kind;
  if (p.kind != Predicate::Kind::Leaf) {
    for (const auto& child : p.children) c.children.push_back(compile(child, t));
    return c;
  }
  const SymbolApp& app = p.leaf;
  c.symbol = app.symbol;
  c.column = column_index(t, app.column);
  ColumnType want = symbol_operand_type(app.symbol);
  if (t.schema()[c.column].type != want) {
    throw ValidityError(std::string(symbol_name(app.symbol)) + " applied to non-" +
                        std::string(to_string(want)) + " column '" + app.column + "'");
  }
  if ((symbol_arity(app.symbol) == 2) != app.operand.has_value()) {
    throw ValidityError(std::string(symbol_name(app.symbol)) + " has the wrong number of arguments");
  }
  if (app.operand) {
    if (const auto* ref = std::get_if<ColumnRef>(&*app.operand)) {
      c.operand_is_column = true;
      c.operand_column = column_index(t, ref->name);
      if (t.schema()[c.operand_column].type != want) {
        throw ValidityError("operand column '" + ref->name + "' has the wrong type");
      }
    } else {
      c.constant = std::get<Value>(*app.operand);
      if (c.constant.type() != want) throw ValidityError("predicate constant has the wrong type");
    }
  }
  return c;
}

bool eval(const Compiled& c, const Row& row) {
  switch (c.kind) {
    case Predicate::Kind::And:
      return eval(c.children[0], row) && eval(c.children[1], row);
    case Predicate::Kind::Or:
      return eval(c.children[0], row) || eval(c.children[1], row);
    case Predicate::Kind::Not:
      return !eval(c.children[0], row);
    case Predicate::Kind::Leaf:
      break;
  }
  const Value& x = row[c.column];
  const Value& y = c.operand_is_column ? row[c.operand_column] : c.constant;
  switch (c.symbol) {
    case PredicateSymbol::IsOdd:
      return arith::floor_mod(x.as_int(), 2) == 1;
    case PredicateSymbol::IsEven:
      return arith::floor_mod(x.as_int(), 2) == 0;
    case PredicateSymbol::IntEq:
      return x.as_int() == y.as_int();
    case PredicateSymbol::IntLt:
      return x.as_int() < y.as_int();
    case PredicateSymbol::IntLeq:
      return x.as_int() <= y.as_int();
    case PredicateSymbol::IntGt:
      return x.as_int() > y.as_int();
    case PredicateSymbol::IntGeq:
      return x.as_int() >= y.as_int();
    case PredicateSymbol::StrEq:
      return x.as_str() == y.as_str();
    case PredicateSymbol::IsSubstring:
      return x.as_str().find(y.as_str()) != std::string::npos;
    case PredicateSymbol::StartsWith:
      return x.as_str().starts_with(y.as_str());
    case PredicateSymbol::EndsWith:
      return x.as_str().ends_with(y.as_str());
  }
  return false;
}

const Table& lookup(const ExecState& state, const std::string& name) {
  auto it = state.find(name);
  if (it == state.end()) throw ValidityError("table '" + name + "' is not defined");
  return it->second;
}

}  // namespace

bool eval_predicate(const Predicate& predicate, const Table& table, std::size_t row) {
  return eval(compile(predicate, table), table.rows().at(row));
}

std::vector<bool> predicate_mask(const Table& table, const Predicate& predicate) {
  Compiled c = compile(predicate, table);
  std::vector<bool> out;
  out.reserve(table.row_count());
  for (const auto& r : table.rows()) out.push_back(eval(c, r));
  return out;
}

Table exec_filter(const Table& table, const Predicate& predicate, std::string target) {
  Compiled c = compile(predicate, table);
  std::vector<Row> rows;
  for (const auto& r : table.rows()) {
    if (eval(c, r)) rows.push_back(r);
  }
  return Table(std::move(target), table.schema(), std::move(rows));
}

Table exec_join(const Table& left, const Table& right, const std::string& left_column,
                const std::string& right_column, std::string target) {
  if (left.name() == right.name()) throw ValidityError("cannot join table '" + left.name() + "' with itself");
  std::size_t lc = column_index(left, left_column);
  std::size_t rc = column_index(right, right_column);
  if (left.schema()[lc].type != ColumnType::Id || right.schema()[rc].type != ColumnType::Id) {
    throw ValidityError("Join requires Id-typed columns");
  }
  Schema schema = join_schema(left.name(), left.schema(), right.name(), right.schema());
  std::unordered_map<Value, std::vector<const Row*>> by_key;
  for (const auto& r : right.rows()) by_key[r[rc]].push_back(&r);
  std::vector<Row> rows;
  for (const auto& l : left.rows()) {
    auto it = by_key.find(l[lc]);
    if (it == by_key.end()) continue;
    for (const Row* r : it->second) {
      Row out = l;
      out.insert(out.end(), r->begin(), r->end());
      rows.push_back(std::move(out));
    }
  }
  return Table(std::move(target), std::move(schema), std::move(rows));
}

Table exec_groupjoin(const Table& table, const std::string& index, const std::vector<AggSpec>& aggs,
                     std::string target) {
  std::size_t ic = column_index(table, index);
  std::vector<std::size_t> agg_cols;
  for (const auto& a : aggs) {
    std::size_t c = column_index(table, a.column);
    if (a.agg != Aggregate::Cnt && table.schema()[c].type != ColumnType::Int) {
      throw ValidityError(std::string(aggregate_name(a.agg)) + " over non-Int column '" + a.column + "'");
    }
    agg_cols.push_back(c);
  }
  Schema schema = groupjoin_schema(table.schema(), aggs);

  std::unordered_map<Value, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < table.row_count(); ++i) groups[table.at(i, ic)].push_back(i);

  std::unordered_map<Value, std::vector<Value>> results;
  for (const auto& [key, members] : groups) {
    std::vector<Value> vals;
    for (std::size_t k = 0; k < aggs.size(); ++k) {
      std::size_t c = agg_cols[k];
      auto n = static_cast<std::int64_t>(members.size());
      if (aggs[k].agg == Aggregate::Cnt) {
        vals.emplace_back(n);
        continue;
      }
      std::int64_t mx = table.at(members[0], c).as_int();
      std::int64_t mn = mx;
      std::int64_t sum = 0;
      for (auto i : members) {
        std::int64_t v = table.at(i, c).as_int();
        mx = std::max(mx, v);
        mn = std::min(mn, v);
        sum = arith::add(sum, v);
      }
      switch (aggs[k].agg) {
        case Aggregate::Max:
          vals.emplace_back(mx);
          break;
        case Aggregate::Min:
          vals.emplace_back(mn);
          break;
        case Aggregate::Sum:
          vals.emplace_back(sum);
          break;
        case Aggregate::Avg:
          vals.emplace_back(sum / n);
          break;
        case Aggregate::Cnt:
          break;
      }
    }
    results.emplace(key, std::move(vals));
  }

  std::vector<Row> rows;
  rows.reserve(table.row_count());
  for (const auto& r : table.rows()) {
    Row out = r;
    const auto& extra = results.at(r[ic]);
    out.insert(out.end(), extra.begin(), extra.end());
    rows.push_back(std::move(out));
  }
  return Table(std::move(target), std::move(schema), std::move(rows));
}

Table exec_order(const Table& table, const std::string& column, std::int64_t start, bool inverse,
                 const std::optional<std::string>& index, std::string target) {
  std::size_t oc = column_index(table, column);
  if (table.schema()[oc].type == ColumnType::Id) {
    throw ValidityError("cannot order by Id column '" + column + "'");
  }
  std::optional<std::size_t> ic;
  if (index) ic = column_index(table, *index);
  Schema schema = order_schema(table.schema(), column);

  // Sorted column values per group; rank = rows strictly before in that order.
  std::unordered_map<Value, std::vector<Value>> groups;
  Value all_key;
  for (const auto& r : table.rows()) groups[ic ? r[*ic] : all_key].push_back(r[oc]);
  for (auto& [k, vals] : groups) std::sort(vals.begin(), vals.end());

  std::vector<Row> rows;
  rows.reserve(table.row_count());
  for (const auto& r : table.rows()) {
    const auto& vals = groups.at(ic ? r[*ic] : all_key);
    std::size_t before = inverse
                             ? static_cast<std::size_t>(vals.end() - std::upper_bound(vals.begin(), vals.end(), r[oc]))
                             : static_cast<std::size_t>(std::lower_bound(vals.begin(), vals.end(), r[oc]) - vals.begin());
    Row out = r;
    out.emplace_back(arith::add(start, static_cast<std::int64_t>(before)));
    rows.push_back(std::move(out));
  }
  return Table(std::move(target), std::move(schema), std::move(rows));
}

Table exec_transform(const ExecState& state, const TransformStmt& stmt) {
  struct Visitor {
    const ExecState& state;
    const std::string& target;
    Table operator()(const FilterOp& f) const { return exec_filter(lookup(state, f.source), f.predicate, target); }
    Table operator()(const JoinOp& j) const {
      return exec_join(lookup(state, j.left), lookup(state, j.right), j.left_column, j.right_column, target);
    }
    Table operator()(const GroupJoinOp& g) const {
      return exec_groupjoin(lookup(state, g.source), g.index, g.aggs, target);
    }
    Table operator()(const OrderOp& o) const {
      return exec_order(lookup(state, o.source), o.column, o.start, o.inverse, o.index, target);
    }
  };
  return std::visit(Visitor{state, stmt.target}, stmt.op);
}

Table exec_yield(const Table& src, const MappingStmt& stmt, const ActionSignature& action) {
  Schema schema = action.output_schema();
  if (stmt.projections.size() != schema.size()) {
    throw ValidityError("Yield has " + std::to_string(stmt.projections.size()) + " projections, expected " +
                        std::to_string(schema.size()));
  }
  // Resolve each projection to a per-row evaluator.
  struct Resolved {
    const Projection* proj;
    std::vector<std::size_t> cols;
  };
  std::vector<Resolved> resolved;
  for (const auto& p : stmt.projections) {
    Resolved r{&p, {}};
    if (const auto* c = std::get_if<ColProj>(&p)) {
      r.cols.push_back(column_index(src, c->column));
    } else if (const auto* m = std::get_if<MutateProj>(&p)) {
      for (const auto& col : m->columns) r.cols.push_back(column_index(src, col));
    }
    resolved.push_back(std::move(r));
  }
  std::vector<Row> rows;
  rows.reserve(src.row_count());
  std::vector<Value> args;
  for (const auto& row : src.rows()) {
    Row out;
    out.reserve(resolved.size());
    for (const auto& r : resolved) {
      if (std::holds_alternative<ColProj>(*r.proj)) {
        out.push_back(row[r.cols[0]]);
      } else if (const auto* k = std::get_if<ConstProj>(r.proj)) {
        out.push_back(k->value);
      } else {
        args.clear();
        for (auto c : r.cols) args.push_back(row[c]);
        out.push_back(apply_feature(std::get<MutateProj>(*r.proj).feature, args));
      }
    }
    rows.push_back(std::move(out));
  }
  return Table(action.name, std::move(schema), std::move(rows));
}

Table exec_yield(const ExecState& state, const MappingStmt& stmt, const ActionSignature& action) {
  return exec_yield(lookup(state, stmt.source), stmt, action);
}

Table exec_program(const Program& program, std::span<const Table> inputs, const ActionSignature& action) {
  auto schemas = schemas_of(inputs);
  auto violations = validate_program(program, schemas, action);
  if (!violations.empty()) throw ValidityError(violations.front().to_string());

  ExecState state;
  for (const auto& t : inputs) state.insert_or_assign(t.name(), t);
  for (const auto& stmt : program.transforms) {
    Table t = exec_transform(state, stmt);
    state.insert_or_assign(stmt.target, std::move(t));
  }
  Table out(action.name, action.output_schema(), {});
  for (const auto& m : program.mappings) out = union_tables(out, exec_yield(state, m, action));
  return out;
}

}  // namespace bee
