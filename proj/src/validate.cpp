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

#include "bee/validate.hpp"

#include <map>
#include <set>

#include "bee/error.hpp"

namespace bee {

std::string Violation::to_string() const {
  return "statement " + std::to_string(index) + ": rule: " + rule + ": " + message;
}

std::vector<NamedSchema> schemas_of(std::span<const Table> tables) {
  std::vector<NamedSchema> out;
  for (const auto& t : tables) out.push_back({t.name(), t.schema()});
  return out;
}

namespace {

using Problems = std::vector<std::pair<std::string, std::string>>;

void check_predicate(const Predicate& p, const Schema& schema, Problems& problems) {
  if (p.kind != Predicate::Kind::Leaf) {
    for (const auto& c : p.children) check_predicate(c, schema, problems);
    std::size_t expected = p.kind == Predicate::Kind::Not ? 1 : 2;
    if (p.children.size() != expected) {
      problems.emplace_back(kRulePredicateType, "malformed predicate combinator");
    }
    return;
  }
  const SymbolApp& app = p.leaf;
  const std::string name(symbol_name(app.symbol));
  ColumnType want = symbol_operand_type(app.symbol);
  auto col = schema.find(app.column);
  if (!col) {
    problems.emplace_back(kRuleUnknownColumn, "column '" + app.column + "' in " + name);
    return;
  }
  if (schema[*col].type != want) {
    problems.emplace_back(kRulePredicateType, name + " needs a " + std::string(to_string(want)) +
                                                  " column, '" + app.column + "' is " +
                                                  std::string(to_string(schema[*col].type)));
  }
  bool unary = symbol_arity(app.symbol) == 1;
  if (unary != !app.operand.has_value()) {
    problems.emplace_back(kRulePredicateType, name + " takes " + (unary ? "1" : "2") + " arguments");
    return;
  }
  if (!app.operand) return;
  if (const auto* ref = std::get_if<ColumnRef>(&*app.operand)) {
    auto other = schema.find(ref->name);
    if (!other) {
      problems.emplace_back(kRuleUnknownColumn, "column '" + ref->name + "' in " + name);
    } else if (schema[*other].type != want) {
      problems.emplace_back(kRulePredicateType, name + " operand '" + ref->name + "' is not " +
                                                    std::string(to_string(want)));
    }
  } else {
    const Value& v = std::get<Value>(*app.operand);
    if (v.type() != want) {
      problems.emplace_back(kRulePredicateType,
                            name + " constant " + v.to_string() + " is not " + std::string(to_string(want)));
    }
  }
}

}  // namespace

TransformCheck check_transform(const TransformOp& op,
                               const std::function<const Schema*(const std::string&)>& lookup) {
  TransformCheck out;
  auto& problems = out.problems;
  std::vector<const Schema*> sources;
  for (const auto& s : transform_sources(op)) {
    const Schema* schema = lookup(s);
    if (schema == nullptr) problems.emplace_back(kRuleDefinedBeforeUse, "table '" + s + "' is not defined");
    sources.push_back(schema);
  }
  if (!problems.empty()) return out;

  if (const auto* f = std::get_if<FilterOp>(&op)) {
    check_predicate(f->predicate, *sources[0], problems);
    if (problems.empty()) out.schema = *sources[0];
  } else if (const auto* j = std::get_if<JoinOp>(&op)) {
    if (j->left == j->right) {
      problems.emplace_back(kRuleDistinctJoin, "cannot join table '" + j->left + "' with itself");
    }
    auto check_side = [&](const Schema& s, const std::string& table, const std::string& col) {
      auto idx = s.find(col);
      if (!idx) {
        problems.emplace_back(kRuleUnknownColumn, "column '" + col + "' not in '" + table + "'");
      } else if (s[*idx].type != ColumnType::Id) {
        problems.emplace_back(kRuleIdJoin, "join column '" + col + "' of '" + table + "' is " +
                                               std::string(to_string(s[*idx].type)));
      }
    };
    check_side(*sources[0], j->left, j->left_column);
    check_side(*sources[1], j->right, j->right_column);
    if (problems.empty()) out.schema = join_schema(j->left, *sources[0], j->right, *sources[1]);
  } else if (const auto* g = std::get_if<GroupJoinOp>(&op)) {
    const Schema& s = *sources[0];
    if (!s.contains(g->index)) {
      problems.emplace_back(kRuleUnknownColumn, "index column '" + g->index + "'");
    }
    if (g->aggs.empty()) problems.emplace_back(kRuleAggregateType, "GroupJoin needs at least one aggregate");
    for (const auto& a : g->aggs) {
      auto idx = s.find(a.column);
      if (!idx) {
        problems.emplace_back(kRuleUnknownColumn, "aggregate column '" + a.column + "'");
      } else if (a.agg != Aggregate::Cnt && s[*idx].type != ColumnType::Int) {
        problems.emplace_back(kRuleAggregateType, std::string(aggregate_name(a.agg)) + " over non-Int column '" +
                                                      a.column + "'");
      }
    }
    if (problems.empty()) out.schema = groupjoin_schema(s, g->aggs);
  } else {
    const auto& o = std::get<OrderOp>(op);
    const Schema& s = *sources[0];
    auto idx = s.find(o.column);
    if (!idx) {
      problems.emplace_back(kRuleUnknownColumn, "order column '" + o.column + "'");
    } else if (s[*idx].type == ColumnType::Id) {
      problems.emplace_back(kRuleOrderType, "cannot order by Id column '" + o.column + "'");
    }
    if (o.index && !s.contains(*o.index)) {
      problems.emplace_back(kRuleUnknownColumn, "index column '" + *o.index + "'");
    }
    if (problems.empty()) out.schema = order_schema(s, o.column);
  }
  return out;
}

std::vector<Violation> validate_program(const Program& program, std::span<const NamedSchema> inputs,
                                        const ActionSignature& action) {
  std::vector<Violation> violations;
  std::map<std::string, Schema> defined;
  for (const auto& in : inputs) defined.emplace(in.name, in.schema);
  auto lookup = [&](const std::string& name) -> const Schema* {
    auto it = defined.find(name);
    return it == defined.end() ? nullptr : &it->second;
  };

  std::size_t index = 0;
  for (const auto& stmt : program.transforms) {
    if (defined.count(stmt.target)) {
      violations.push_back({index, kRuleFreshName, "table '" + stmt.target + "' is already defined"});
    }
    auto check = check_transform(stmt.op, lookup);
    for (auto& [rule, message] : check.problems) violations.push_back({index, rule, message});
    if (check.schema && !defined.count(stmt.target)) defined.emplace(stmt.target, *check.schema);
    ++index;
  }

  if (program.mappings.empty()) {
    violations.push_back({index, kRuleNonemptyMapping, "program has no Yield statement"});
  }
  for (const auto& m : program.mappings) {
    const Schema* src = lookup(m.source);
    if (src == nullptr) {
      violations.push_back({index, kRuleDefinedBeforeUse, "table '" + m.source + "' is not defined"});
      ++index;
      continue;
    }
    if (m.projections.empty()) {
      violations.push_back({index, kRuleArity, "Yield has no projections"});
      ++index;
      continue;
    }
    const auto* head = std::get_if<ConstProj>(&m.projections[0]);
    if (head == nullptr || !head->value.is_str() || head->value.as_str() != action.name) {
      violations.push_back({index, kRuleActionConstant,
                            "first projection must be the constant \"" + action.name + "\""});
    }
    if (m.projections.size() != action.args.size() + 1) {
      violations.push_back({index, kRuleArity,
                            "Yield has " + std::to_string(m.projections.size()) + " projections, action '" +
                                action.name + "' needs " + std::to_string(action.args.size() + 1)});
    }
    for (std::size_t i = 1; i < m.projections.size(); ++i) {
      std::optional<ColumnType> got;
      const auto& p = m.projections[i];
      if (const auto* c = std::get_if<ColProj>(&p)) {
        auto idx = src->find(c->column);
        if (!idx) {
          violations.push_back({index, kRuleUnknownColumn, "column '" + c->column + "' not in '" + m.source + "'"});
        } else {
          got = (*src)[*idx].type;
        }
      } else if (const auto* k = std::get_if<ConstProj>(&p)) {
        got = k->value.type();
      } else {
        const auto& mu = std::get<MutateProj>(p);
        std::vector<ColumnType> types;
        bool ok = true;
        for (const auto& col : mu.columns) {
          auto idx = src->find(col);
          if (!idx) {
            violations.push_back({index, kRuleUnknownColumn, "column '" + col + "' not in '" + m.source + "'"});
            ok = false;
          } else {
            types.push_back((*src)[*idx].type);
          }
        }
        if (ok) {
          got = mu.feature.result_type(types);
          if (!got) {
            violations.push_back({index, kRuleFeatureType,
                                  format_feature(mu.feature) + " does not accept its argument columns"});
          }
        }
      }
      if (got && i - 1 < action.args.size() && *got != action.args[i - 1].type) {
        violations.push_back({index, kRuleArgumentType,
                              "argument '" + action.args[i - 1].name + "' expects " +
                                  std::string(to_string(action.args[i - 1].type)) + ", projection gives " +
                                  std::string(to_string(*got))});
      }
    }
    ++index;
  }
  return violations;
}

}  // namespace bee
