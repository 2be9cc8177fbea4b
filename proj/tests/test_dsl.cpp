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

#include <algorithm>

#include "bee/error.hpp"
#include "bee/interpreter.hpp"
#include "bee/program_text.hpp"
#include "bee/table_json.hpp"
#include "bee/validate.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "suites.hpp"

using namespace bee;
namespace fx = bee::fixtures;

namespace {

const char* kAppendixA = R"(u = Filter(ti, isOdd(frame));
v = Filter(ti, isEven(frame));
Yield("shift", u, id, "GB", linear(-5,-25)(frame), linear(-5,-25)(frame));
Yield("shift", v, id, "GB", linear(5,20)(frame), linear(5,20)(frame));
)";

Predicate atom(PredicateSymbol s, std::string col, std::optional<Operand> operand = std::nullopt) {
  return Predicate::atom(SymbolApp{s, std::move(col), std::move(operand)});
}

Table odd_u() { return Table("u", fx::frames_schema(), {fx::frames_in().rows()[0], fx::frames_in().rows()[2]}); }
Table even_v() { return Table("v", fx::frames_schema(), {fx::frames_in().rows()[1], fx::frames_in().rows()[3]}); }

std::vector<std::string> rules(const Program& p, const std::vector<Table>& inputs, const ActionSignature& a) {
  std::vector<std::string> out;
  for (const auto& v : validate_program(p, schemas_of(inputs), a)) out.push_back(v.rule);
  return out;
}

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

Table one_col(const std::string& name, ColumnType type, std::vector<Value> values) {
  std::vector<Row> rows;
  for (auto& v : values) rows.push_back({v});
  return Table(name, Schema({{"x", type}}), std::move(rows));
}

}  // namespace

TEST_SUITE("dsl-core") {
  TEST_CASE("predicates") {
    const Table in = fx::frames_in();
    const auto odd = atom(PredicateSymbol::IsOdd, "frame");
    CHECK(eval_predicate(odd, in, 2));  // canonical row 2 is f3
    CHECK(in.at(2, 1) == Value(3));
    for (std::size_t r = 0; r < in.row_count(); ++r) {
      CHECK(eval_predicate(Predicate::negate(odd), in, r) == !eval_predicate(odd, in, r));
    }
    Table names = Table("f", Schema({{"name", ColumnType::Str}}), {{"a.pdfx"}});
    CHECK(eval_predicate(atom(PredicateSymbol::IsSubstring, "name", Operand(Value("pdf"))), names, 0));
    Table neg = one_col("n", ColumnType::Int, {-3});
    CHECK(eval_predicate(atom(PredicateSymbol::IsOdd, "x"), neg, 0));
    CHECK_THROWS_AS(eval_predicate(atom(PredicateSymbol::IsOdd, "name"), names, 0), ValidityError);
  }

  TEST_CASE("filter") {
    const Table in = fx::frames_in();
    CHECK(exec_filter(in, atom(PredicateSymbol::IsOdd, "frame"), "u") == odd_u());
    CHECK(exec_filter(in, atom(PredicateSymbol::IsEven, "frame"), "v") == even_v());
    const auto always = Predicate::disj(atom(PredicateSymbol::IsOdd, "frame"), atom(PredicateSymbol::IsEven, "frame"));
    CHECK(exec_filter(in, always, "w") == in);
    CHECK(exec_filter(in, always, "w").name() == "w");
  }

  TEST_CASE("join") {
    Table parent("p", Schema({{"id", ColumnType::Id}, {"tag", ColumnType::Str}}),
                 {{Value::id("e1"), "ul"}, {Value::id("e2"), "ol"}});
    Table child("c", Schema({{"id", ColumnType::Id}, {"parent", ColumnType::Id}, {"tag", ColumnType::Str}}),
                {{Value::id("e3"), Value::id("e1"), "li"},
                 {Value::id("e4"), Value::id("e1"), "li"},
                 {Value::id("e5"), Value::id("e2"), "li"}});
    Table j = exec_join(parent, child, "id", "parent", "j");
    CHECK(j.row_count() == 3);
    std::vector<std::string> names;
    for (const auto& c : j.schema().columns()) names.push_back(c.name);
    CHECK(names == std::vector<std::string>{"p.id", "p.tag", "c.id", "parent", "c.tag"});
    CHECK(j.rows()[0] == Row{Value::id("e1"), "ul", Value::id("e3"), Value::id("e1"), "li"});

    Table other("o", Schema({{"ref", ColumnType::Id}}), {{Value::id("zz")}});
    CHECK(exec_join(parent, other, "id", "ref", "j").empty());

    Table copy = parent.renamed("q");
    CHECK(exec_join(parent, copy, "id", "id", "j").row_count() == parent.row_count());
  }

  TEST_CASE("groupjoin") {
    Table t("t", Schema({{"col1", ColumnType::Str}, {"col2", ColumnType::Int}}), {{"g1", 1}, {"g1", 2}, {"g2", 5}});
    Table g = exec_groupjoin(t, "col1", {{Aggregate::Sum, "col2"}}, "g");
    CHECK(g.schema()[2].name == "sum_col2");
    CHECK(g.column_values(2) == std::vector<Value>{3, 3, 5});

    Table files("files", Schema({{"folder", ColumnType::Str}, {"name", ColumnType::Str}, {"size", ColumnType::Int}}),
                {{"/a", "x", 10}, {"/a", "y", 30}, {"/b", "z", 7}});
    Table m = exec_groupjoin(files, "folder", {{Aggregate::Max, "size"}}, "m");
    CHECK(m.column_values(3) == std::vector<Value>{30, 30, 7});

    Table flat("f", Schema({{"k", ColumnType::Str}, {"v", ColumnType::Int}}), {{"same", -3}, {"same", 4}});
    Table c = exec_groupjoin(flat, "k", {{Aggregate::Avg, "v"}, {Aggregate::Cnt, "v"}}, "c");
    CHECK(c.column_values(2) == std::vector<Value>{0, 0});  // (-3 + 4) / 2 truncates to 0
    CHECK(c.column_values(3) == std::vector<Value>{2, 2});

    Table twice = exec_groupjoin(t, "col1", {{Aggregate::Max, "col2"}, {Aggregate::Max, "col2"}}, "d");
    CHECK(twice.schema()[3].name == "max_col2_2");
  }

  TEST_CASE("order") {
    Table t = one_col("t", ColumnType::Int, {10, 30, 20});
    Table o = exec_order(t, "x", 0, false, std::nullopt, "o");
    CHECK(o.schema()[1].name == "ord_x");
    // Rows are canonical: 10, 20, 30.
    CHECK(o.column_values(1) == std::vector<Value>{0, 1, 2});
    Table inv = exec_order(t, "x", 0, true, std::nullopt, "o");
    CHECK(inv.column_values(1) == std::vector<Value>{2, 1, 0});

    CHECK(exec_order(one_col("s", ColumnType::Int, {9}), "x", 0, false, std::nullopt, "o").at(0, 1) == Value(0));

    Table grouped("g", Schema({{"k", ColumnType::Str}, {"v", ColumnType::Int}}), {{"a", 5}, {"b", 3}, {"b", 9}});
    Table r = exec_order(grouped, "v", 0, false, std::string("k"), "r");
    CHECK(r.column_values(2) == std::vector<Value>{0, 0, 1});

    Table ties = one_col("t", ColumnType::Str, {"b", "a", "a2"});
    CHECK(exec_order(ties, "x", 1, false, std::nullopt, "o").column_values(1) == std::vector<Value>{1, 2, 3});
  }

  TEST_CASE("yield") {
    const auto action = fx::shift_action();
    MappingStmt y1{"u",
                   {ConstProj{Value("shift")}, ColProj{"id"}, ConstProj{Value("GB")},
                    MutateProj{FeatureInstance(LinearFeature{-5, -25}), {"frame"}},
                    MutateProj{FeatureInstance(LinearFeature{-5, -25}), {"frame"}}}};
    Table out = exec_yield(odd_u(), y1, action);
    CHECK(out == Table("shift", action.output_schema(), {fx::shift_row(1), fx::shift_row(3)}));

    ActionSignature note{"note", {{"text", ColumnType::Str}}};
    MappingStmt constant{"t", {ConstProj{Value("note")}, ConstProj{Value("hi")}}};
    Table single = one_col("t", ColumnType::Int, {1});
    CHECK(exec_yield(single, constant, note).rows() == std::vector<Row>{{"note", "hi"}});

    Table dup = one_col("t", ColumnType::Int, {1, 2});
    CHECK(exec_yield(dup, constant, note).row_count() == 1);
  }

  TEST_CASE("program execution") {
    Program p = parse_program(kAppendixA);
    const auto action = fx::shift_action();
    const std::vector<Table> in{fx::frames_in()};
    CHECK(exec_program(p, in, action) == fx::shift_out());
    const std::vector<Table> pending{fx::frames("ti", 5, 5)};
    CHECK(exec_program(p, pending, action).rows() == std::vector<Row>{{"shift", Value::id("f5"), "GB", -50, -50}});

    Program trivial;
    ActionSignature note{"note", {{"text", ColumnType::Str}}};
    trivial.mappings.push_back({"t", {ConstProj{Value("note")}, ConstProj{Value("x")}}});
    const std::vector<Table> one{one_col("t", ColumnType::Int, {4})};
    CHECK(exec_program(trivial, one, note).row_count() == 1);

    // Byte-identical output across runs.
    const std::string a = table_to_json(exec_program(p, in, action)).dump();
    const std::string b = table_to_json(exec_program(p, in, action)).dump();
    CHECK(a == b);
  }

  TEST_CASE("validation rules") {
    const std::vector<Table> in{fx::frames_in()};
    const auto action = fx::shift_action();
    CHECK(validate_program(parse_program(kAppendixA), schemas_of(in), action).empty());

    Program first_col = parse_program("Yield(\"shift\", ti, id, \"GB\", frame, frame);");
    std::get<ConstProj>(first_col.mappings[0].projections[0]);
    first_col.mappings[0].projections[0] = ColProj{"file"};
    CHECK(has(rules(first_col, in, action), kRuleActionConstant));

    Program int_join = parse_program("j = Join(ti, ti2, frame, frame);\nYield(\"shift\", j, ti.id, \"GB\", 1, 1);");
    const std::vector<Table> two{fx::frames_in(), fx::frames("ti2", 1, 4)};
    CHECK(has(rules(int_join, two, action), kRuleIdJoin));

    CHECK(has(rules(parse_program("Yield(\"shift\", nope, id, \"GB\", 1, 1);"), in, action), kRuleDefinedBeforeUse));
    CHECK(has(rules(parse_program("ti = Filter(ti, isOdd(frame));\nYield(\"shift\", ti, id, \"GB\", 1, 1);"), in,
                    action),
              kRuleFreshName));
    CHECK(has(rules(parse_program("u = Filter(ti, isOdd(file));\nYield(\"shift\", u, id, \"GB\", 1, 1);"), in, action),
              kRulePredicateType));
    CHECK(has(rules(parse_program("u = Order(ti, id, 0, false);\nYield(\"shift\", u, id, \"GB\", 1, 1);"), in, action),
              kRuleOrderType));
    CHECK(has(rules(parse_program("u = GroupJoin(ti, file, (sum, file));\nYield(\"shift\", u, id, \"GB\", 1, 1);"), in,
                    action),
              kRuleAggregateType));
    CHECK(has(rules(parse_program("Yield(\"shift\", ti, id, \"GB\", 1);"), in, action), kRuleArity));
    CHECK(has(rules(parse_program("Yield(\"shift\", ti, id, 5, 1, 1);"), in, action), kRuleArgumentType));
    CHECK(has(rules(parse_program("Yield(\"shift\", ti, id, \"GB\", linear(1,0)(file), 1);"), in, action),
              kRuleFeatureType));
    CHECK(has(rules(parse_program("Yield(\"move\", ti, id, \"GB\", 1, 1);"), in, action), kRuleActionConstant));

    Program bad = parse_program("Yield(\"shift\", nope, id, \"GB\", 1, 1);");
    CHECK_THROWS_AS(exec_program(bad, in, action), ValidityError);
  }

  TEST_CASE("program text round trip") {
    Program p = parse_program(kAppendixA);
    CHECK(format_program(p) == kAppendixA);
    const char* rich = R"(a = Filter(t, and(not(intLt(n, 3)), or(strEq(g, "x"), isSubstring(s, "a\"b"))));
b = GroupJoin(a, g, (max, n), (cnt, s));
c = Order(b, n, 1, true, g);
d = Join(c, t, k, k);
Yield("act", d, c.id, mod(1,-2,7)(c.n), concat[x0{Alnum#1} "-" x1{Digits#-1}](c.s, c.g), "lit", 4);
)";
    Program q = parse_program(rich);
    CHECK(format_program(q) == rich);
    CHECK(parse_program(format_program(q)) == q);
    CHECK_THROWS_AS(parse_program("u = Filter(ti, isOdd(frame)"), ParseError);
    CHECK_THROWS_AS(parse_program("u = Frobnicate(ti);"), ParseError);
  }

  TEST_CASE("interpreter laws") {
    CHECK(suites::filter_partition(200, 1).ok());
    CHECK(suites::join_nested_loop(200, 2).ok());
    CHECK(suites::groupjoin_preservation(200, 3).ok());
    CHECK(suites::order_ranks(200, 4).ok());
  }
}
