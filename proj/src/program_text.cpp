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

#include "bee/program_text.hpp"

#include "bee/error.hpp"
#include "feature_parse.hpp"
#include "text_lexer.hpp"

namespace bee {

using detail::format_identifier;
using detail::Lexer;
using detail::Tok;

namespace {

std::string format_operand(const Operand& op) {
  if (const auto* ref = std::get_if<ColumnRef>(&op)) return format_identifier(ref->name);
  return std::get<Value>(op).to_string();
}

std::string format_columns(const std::vector<std::string>& cols) {
  std::string out;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) out += ", ";
    out += format_identifier(cols[i]);
  }
  return out;
}

// Constant literal: integer, string, or id("label").
bool at_constant(const Lexer& lex) {
  const auto& t = lex.peek();
  return t.kind == Tok::Int || t.kind == Tok::String;
}

Value parse_constant(Lexer& lex) {
  const auto& t = lex.peek();
  if (t.kind == Tok::Int) return Value(lex.expect_int());
  if (t.kind == Tok::String) return Value(lex.expect_string());
  lex.fail("expected constant");
}

Value parse_id_constant(Lexer& lex) {
  lex.expect_ident();  // id
  lex.expect_sym('(');
  std::string label = lex.expect_string();
  lex.expect_sym(')');
  return Value::id(std::move(label));
}

Predicate parse_predicate(Lexer& lex) {
  std::string name = lex.expect_ident();
  lex.expect_sym('(');
  Predicate out;
  if (name == "and" || name == "or") {
    Predicate a = parse_predicate(lex);
    lex.expect_sym(',');
    Predicate b = parse_predicate(lex);
    out = name == "and" ? Predicate::conj(std::move(a), std::move(b))
                        : Predicate::disj(std::move(a), std::move(b));
  } else if (name == "not") {
    out = Predicate::negate(parse_predicate(lex));
  } else {
    auto symbol = symbol_from_name(name);
    if (!symbol) lex.fail("unknown predicate '" + name + "'");
    SymbolApp app;
    app.symbol = *symbol;
    app.column = lex.expect_ident();
    if (symbol_arity(*symbol) == 2) {
      lex.expect_sym(',');
      if (at_constant(lex)) {
        app.operand = parse_constant(lex);
      } else if (lex.at_ident("id") ) {
        // Either a column named id or an id("...") constant.
        Lexer probe = lex;
        probe.next();
        if (probe.at_sym('(')) {
          app.operand = parse_id_constant(lex);
        } else {
          app.operand = ColumnRef{lex.expect_ident()};
        }
      } else {
        app.operand = ColumnRef{lex.expect_ident()};
      }
    }
    out = Predicate::atom(std::move(app));
  }
  lex.expect_sym(')');
  return out;
}

Projection parse_projection(Lexer& lex) {
  if (at_constant(lex)) return ConstProj{parse_constant(lex)};
  if (lex.peek().kind != Tok::Ident) lex.fail("expected projection");
  Lexer probe = lex;
  std::string name = probe.next().text;
  bool call = probe.at_sym('(') || probe.at_sym('{') || probe.at_sym('[');
  if (!call) return ColProj{lex.expect_ident()};
  if (name == "id" && probe.at_sym('(')) return ConstProj{parse_id_constant(lex)};
  FeatureInstance feature = detail::parse_feature(lex);
  MutateProj m{std::move(feature), {}};
  lex.expect_sym('(');
  while (true) {
    m.columns.push_back(lex.expect_ident());
    if (lex.at_sym(')')) break;
    lex.expect_sym(',');
  }
  lex.expect_sym(')');
  return m;
}

bool parse_bool(Lexer& lex) {
  std::string b = lex.expect_ident();
  if (b == "true") return true;
  if (b == "false") return false;
  lex.fail("expected true or false");
}

TransformOp parse_op(Lexer& lex) {
  std::string op = lex.expect_ident();
  lex.expect_sym('(');
  TransformOp out;
  if (op == "Filter") {
    FilterOp f;
    f.source = lex.expect_ident();
    lex.expect_sym(',');
    f.predicate = parse_predicate(lex);
    out = std::move(f);
  } else if (op == "Join") {
    JoinOp j;
    j.left = lex.expect_ident();
    lex.expect_sym(',');
    j.right = lex.expect_ident();
    lex.expect_sym(',');
    j.left_column = lex.expect_ident();
    lex.expect_sym(',');
    j.right_column = lex.expect_ident();
    out = std::move(j);
  } else if (op == "GroupJoin") {
    GroupJoinOp g;
    g.source = lex.expect_ident();
    lex.expect_sym(',');
    g.index = lex.expect_ident();
    while (lex.at_sym(',')) {
      lex.next();
      lex.expect_sym('(');
      std::string agg = lex.expect_ident();
      auto a = aggregate_from_name(agg);
      if (!a) lex.fail("unknown aggregate '" + agg + "'");
      lex.expect_sym(',');
      g.aggs.push_back({*a, lex.expect_ident()});
      lex.expect_sym(')');
    }
    out = std::move(g);
  } else if (op == "Order") {
    OrderOp o;
    o.source = lex.expect_ident();
    lex.expect_sym(',');
    o.column = lex.expect_ident();
    lex.expect_sym(',');
    o.start = lex.expect_int();
    lex.expect_sym(',');
    o.inverse = parse_bool(lex);
    if (lex.at_sym(',')) {
      lex.next();
      o.index = lex.expect_ident();
    }
    out = std::move(o);
  } else {
    lex.fail("unknown operator '" + op + "'");
  }
  lex.expect_sym(')');
  return out;
}

MappingStmt parse_yield(Lexer& lex) {
  lex.expect_sym('(');
  MappingStmt m;
  m.projections.push_back(parse_projection(lex));
  lex.expect_sym(',');
  m.source = lex.expect_ident();
  while (lex.at_sym(',')) {
    lex.next();
    m.projections.push_back(parse_projection(lex));
  }
  lex.expect_sym(')');
  return m;
}

}  // namespace

std::string format_predicate(const Predicate& p) {
  switch (p.kind) {
    case Predicate::Kind::And:
      return "and(" + format_predicate(p.children[0]) + ", " + format_predicate(p.children[1]) + ")";
    case Predicate::Kind::Or:
      return "or(" + format_predicate(p.children[0]) + ", " + format_predicate(p.children[1]) + ")";
    case Predicate::Kind::Not:
      return "not(" + format_predicate(p.children[0]) + ")";
    case Predicate::Kind::Leaf:
      break;
  }
  std::string out = std::string(symbol_name(p.leaf.symbol)) + "(" + format_identifier(p.leaf.column);
  if (p.leaf.operand) out += ", " + format_operand(*p.leaf.operand);
  return out + ")";
}

std::string format_projection(const Projection& p) {
  if (const auto* c = std::get_if<ColProj>(&p)) return format_identifier(c->column);
  if (const auto* k = std::get_if<ConstProj>(&p)) return k->value.to_string();
  const auto& m = std::get<MutateProj>(p);
  return format_feature(m.feature) + "(" + format_columns(m.columns) + ")";
}

std::string format_transform(const TransformStmt& stmt) {
  struct Visitor {
    std::string operator()(const FilterOp& f) const {
      return "Filter(" + format_identifier(f.source) + ", " + format_predicate(f.predicate) + ")";
    }
    std::string operator()(const JoinOp& j) const {
      return "Join(" + format_columns({j.left, j.right, j.left_column, j.right_column}) + ")";
    }
    std::string operator()(const GroupJoinOp& g) const {
      std::string out = "GroupJoin(" + format_identifier(g.source) + ", " + format_identifier(g.index);
      for (const auto& a : g.aggs) {
        out += ", (" + std::string(aggregate_name(a.agg)) + ", " + format_identifier(a.column) + ")";
      }
      return out + ")";
    }
    std::string operator()(const OrderOp& o) const {
      std::string out = "Order(" + format_identifier(o.source) + ", " + format_identifier(o.column) + ", " +
                        std::to_string(o.start) + ", " + (o.inverse ? "true" : "false");
      if (o.index) out += ", " + format_identifier(*o.index);
      return out + ")";
    }
  };
  return format_identifier(stmt.target) + " = " + std::visit(Visitor{}, stmt.op) + ";";
}

std::string format_mapping(const MappingStmt& stmt) {
  std::string out = "Yield(";
  for (std::size_t i = 0; i < stmt.projections.size(); ++i) {
    if (i) out += ", ";
    out += format_projection(stmt.projections[i]);
    if (i == 0) out += ", " + format_identifier(stmt.source);
  }
  if (stmt.projections.empty()) out += format_identifier(stmt.source);
  return out + ");";
}

std::string format_program(const Program& program) {
  std::string out;
  for (const auto& t : program.transforms) out += format_transform(t) + "\n";
  for (const auto& m : program.mappings) out += format_mapping(m) + "\n";
  return out;
}

Program parse_program(std::string_view text) {
  Lexer lex(text);
  Program program;
  while (!lex.at_end()) {
    if (lex.at_ident("Yield")) {
      lex.next();
      program.mappings.push_back(parse_yield(lex));
    } else {
      if (!program.mappings.empty()) lex.fail("transform statements must precede Yield statements");
      TransformStmt stmt;
      stmt.target = lex.expect_ident();
      lex.expect_sym('=');
      stmt.op = parse_op(lex);
      program.transforms.push_back(std::move(stmt));
    }
    lex.expect_sym(';');
  }
  return program;
}

Predicate parse_predicate(std::string_view text) {
  Lexer lex(text);
  Predicate p = parse_predicate(lex);
  if (!lex.at_end()) lex.fail("trailing input after predicate");
  return p;
}

}  // namespace bee
