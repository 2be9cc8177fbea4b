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

#include <random>

#include "bee/error.hpp"
#include "bee/table.hpp"
#include "bee/table_json.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace bee;
namespace fx = bee::fixtures;

namespace {

std::size_t row_of(const Table& t, const std::string& id) {
  const auto col = t.schema().index_of(t.schema().contains("id") ? "id" : "col1");
  for (std::size_t r = 0; r < t.row_count(); ++r) {
    if (t.at(r, col) == Value::id(id)) return r;
  }
  FAIL("no row " << id);
  return 0;
}

Table ints(const std::string& name, std::vector<int> values) {
  std::vector<Row> rows;
  for (int v : values) rows.push_back({v});
  return Table(name, Schema({{"x", ColumnType::Int}}), std::move(rows));
}

}  // namespace

TEST_SUITE("table-model") {
  TEST_CASE("values compare structurally across types") {
    CHECK(Value(1) == Value(std::int64_t{1}));
    CHECK(Value("1") != Value(1));
    CHECK(Value::id("1") != Value("1"));
    CHECK(Value::id("a") < Value::id("b"));
    CHECK(Value(3).type() == ColumnType::Int);
    CHECK(Value::id("f1").type() == ColumnType::Id);
    CHECK_THROWS_AS(Value("x").as_int(), TypeMismatch);
  }

  TEST_CASE("integer arithmetic refuses to wrap") {
    CHECK_THROWS_AS(arith::add(INT64_MAX, 1), OverflowError);
    CHECK_THROWS_AS(arith::mul(INT64_MAX / 2, 3), OverflowError);
    CHECK(arith::floor_div(-7, 2) == -4);
    CHECK(arith::floor_mod(-7, 3) == 2);
  }

  TEST_CASE("fetch") {
    const Table in = fx::frames_in();
    CHECK(in.fetch(row_of(in, "f3"), "frame") == Value(3));
    const Table out = fx::shift_out();
    std::size_t f2 = 0;
    for (std::size_t r = 0; r < out.row_count(); ++r) {
      if (out.fetch(r, "id") == Value::id("f2")) f2 = r;
    }
    CHECK(out.fetch(f2, "bx") == Value(30));
    CHECK(ints("t", {7}).fetch(0, "x") == Value(7));
    CHECK_THROWS_AS(in.fetch(0, "nope"), SchemaError);
    CHECK_THROWS_AS(in.fetch(99, "frame"), LookupError);
  }

  TEST_CASE("project") {
    const Table in = fx::frames_in();
    const std::vector<std::string> file{"file"};
    Table p = project(in, file);
    CHECK(p.row_count() == 1);
    CHECK(p.at(0, 0) == Value("tiktok.jpg"));

    const std::vector<std::string> all{"file", "frame", "id"};
    CHECK(project(in, all) == in);

    Table two("t", Schema({{"col1", ColumnType::Int}, {"col2", ColumnType::Str}}), {{1, "a"}, {1, "b"}});
    const std::vector<std::string> c1{"col1"};
    Table one = project(two, c1);
    CHECK(one.row_count() == 1);
    CHECK(one.at(0, 0) == Value(1));

    CHECK_THROWS_AS(project(in, std::vector<std::string>{}), InvalidProjection);
    CHECK_THROWS_AS(project(in, std::vector<std::string>{"nope"}), SchemaError);
  }

  TEST_CASE("append_column") {
    const Table in = fx::frames_in();
    Table odd = Table("u", in.schema(), {in.rows()[0], in.rows()[2]});
    Table c = append_column(odd, "c", ColumnType::Str, {"shift", "shift"});
    CHECK(c.column_count() == 4);
    CHECK(c.row_count() == 2);
    CHECK(c.fetch(1, "c") == Value("shift"));

    Table empty("e", Schema({{"x", ColumnType::Int}}), {});
    Table e2 = append_column(empty, "y", ColumnType::Int, {});
    CHECK(e2.row_count() == 0);
    CHECK(e2.column_count() == 2);

    Table xy = append_column(ints("t", {2, 1}), "y", ColumnType::Int, {10, 20});
    CHECK(xy.rows() == std::vector<Row>{{1, 10}, {2, 20}});

    CHECK_THROWS_AS(append_column(ints("t", {1}), "y", ColumnType::Int, {}), SchemaError);
    CHECK_THROWS_AS(append_column(ints("t", {1}), "x", ColumnType::Int, {5}), SchemaError);
    CHECK_THROWS_AS(append_column(ints("t", {1}), "y", ColumnType::Int, {"s"}), TypeMismatch);
  }

  TEST_CASE("union") {
    const Table y1 = fx::shift_rows(1, 1);
    Table odd("y1", fx::shift_out().schema(), {fx::shift_row(1), fx::shift_row(3)});
    Table even("y2", fx::shift_out().schema(), {fx::shift_row(2), fx::shift_row(4)});
    CHECK(union_tables(odd, even) == fx::shift_out());
    CHECK(union_tables(odd, odd) == odd);
    CHECK(union_tables(odd, Table("e", odd.schema(), {})) == odd);
    CHECK_THROWS_AS(union_tables(odd, fx::frames_in()), SchemaError);
    (void)y1;
  }

  TEST_CASE("construction enforces set semantics and types") {
    Table t = ints("t", {3, 1, 3, 2});
    CHECK(t.rows() == std::vector<Row>{{1}, {2}, {3}});
    CHECK_THROWS_AS(Table("t", Schema({{"x", ColumnType::Int}}), {{"s"}}), TypeMismatch);
    CHECK_THROWS_AS(Table("t", Schema({{"x", ColumnType::Int}}), {{1, 2}}), SchemaError);
    CHECK_THROWS_AS(Table("t", Schema(), {}), SchemaError);
    CHECK_THROWS_AS(Schema({{"x", ColumnType::Int}, {"x", ColumnType::Str}}), SchemaError);
  }

  TEST_CASE("set laws on random tables") {
    gen::Rng rng(7);
    for (int i = 0; i < 300; ++i) {
      Table a = gen::random_law_table(rng, "a", 5);
      Table b = gen::random_law_table(rng, "a", 5);
      Table c = gen::random_law_table(rng, "a", 5);
      CHECK(union_tables(a, b) == union_tables(b, a));
      CHECK(union_tables(union_tables(a, b), c) == union_tables(a, union_tables(b, c)));
      CHECK(union_tables(a, a) == a);
      const std::vector<std::string> cols{"g", "n"};
      CHECK(project(project(a, cols), cols) == project(a, cols));
    }
  }

  TEST_CASE("JSON round trip keeps canonical order") {
    gen::Rng rng(8);
    for (int i = 0; i < 200; ++i) {
      Table t = gen::random_law_table(rng, "t", 6);
      json j = table_to_json(t);
      Table back = table_from_json(parse_json_text(j.dump(), "test"));
      CHECK(back == t);
      CHECK(back.name() == t.name());
      CHECK(table_to_json(back).dump() == j.dump());
    }
    json id = value_to_json(Value::id("f1"));
    CHECK(id == json{{"id", "f1"}});
    CHECK_THROWS_AS(table_from_json(json{{"name", "t"}, {"columns", json::array({{{"name", "x"}, {"type", "Float"}}})},
                                         {"rows", json::array()}}),
                    ParseError);
  }
}
