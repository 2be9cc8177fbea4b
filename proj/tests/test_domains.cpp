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
#include <filesystem>
#include <fstream>

#include "bee/domains.hpp"
#include "bee/error.hpp"
#include "bee/interpreter.hpp"
#include "bee/program_text.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bee;
namespace fx = bee::fixtures;

namespace {

std::string source_path(const std::string& rel) { return std::string(BEE_SOURCE_DIR) + "/" + rel; }

json running_json() { return read_json_file(source_path("benchmarks/running/shift_frames.json")); }

const char* kAppendixA = R"(u = Filter(ti, isOdd(frame));
v = Filter(ti, isEven(frame));
Yield("shift", u, id, "GB", linear(-5,-25)(frame), linear(-5,-25)(frame));
Yield("shift", v, id, "GB", linear(5,20)(frame), linear(5,20)(frame));
)";

}  // namespace

TEST_SUITE("domains") {
  TEST_CASE("built-in domains") {
    const auto& all = builtin_domains();
    REQUIRE(all.size() == 3);
    const DomainSpec* file = find_builtin_domain("file");
    REQUIRE(file);
    CHECK(file->actions.size() == 9);
    CHECK(file->find_action("tar"));
    CHECK(file->find_action("chgrp"));
    const auto* chmod = file->find_action("chmod");
    REQUIRE(chmod);
    CHECK(chmod->args == std::vector<Column>{{"id", ColumnType::Id}, {"mod", ColumnType::Str}});
    CHECK(file->entities.at(0).fields.size() == 16);

    const DomainSpec* sheet = find_builtin_domain("spreadsheet");
    REQUIRE(sheet);
    REQUIRE(sheet->actions.size() == 1);
    CHECK(sheet->actions[0].name == "fill");
    CHECK(sheet->actions[0].args ==
          std::vector<Column>{{"content", ColumnType::Str}, {"row", ColumnType::Int}, {"col", ColumnType::Int}});
    CHECK(sheet->entities.size() == 2);

    const DomainSpec* xml = find_builtin_domain("xml");
    REQUIRE(xml);
    CHECK(xml->actions.size() == 10);
    const auto* wrap = xml->find_action("wrap");
    REQUIRE(wrap);
    CHECK(wrap->args == std::vector<Column>{{"element", ColumnType::Id}, {"tag", ColumnType::Str}});
    const auto& elements = xml->entities.at(0).fields;
    auto has_field = [&](const char* name) {
      return std::any_of(elements.begin(), elements.end(), [&](const FieldSpec& f) {
        return f.name == name && f.types == std::vector<ColumnType>{ColumnType::Id};
      });
    };
    CHECK(has_field("previous"));
    CHECK(has_field("next"));
    CHECK_FALSE(find_builtin_domain("nope"));
  }

  TEST_CASE("domain JSON round trip") {
    for (const auto& d : builtin_domains()) CHECK(domain_from_json(domain_to_json(d)) == d);
  }

  TEST_CASE("open entity schemas") {
    const DomainSpec* sheet = find_builtin_domain("spreadsheet");
    const EntitySchema& tabular = sheet->entities.at(1);
    CHECK(tabular.accepts(Schema({{"row", ColumnType::Int}, {"col1", ColumnType::Str}, {"col2", ColumnType::Int}})));
    CHECK_FALSE(tabular.accepts(Schema({{"row", ColumnType::Int}, {"col2", ColumnType::Str}})));
    CHECK_FALSE(tabular.accepts(Schema({{"row", ColumnType::Int}, {"col1", ColumnType::Id}})));
  }

  TEST_CASE("load the running example") {
    BenchmarkCase c = load_benchmark(source_path("benchmarks/running/shift_frames.json"));
    CHECK(c.inputs.size() == 1);
    CHECK(c.inputs[0] == fx::frames_in());
    CHECK(c.output == fx::shift_out());
    CHECK(c.action == fx::shift_action());
    CHECK(c.constants.empty());
    REQUIRE(c.pending.size() == 1);
    CHECK(c.pending[0] == fx::frames("ti", 5, 8));
    CHECK(c.expected == fx::shift_rows(5, 8));
    CHECK(c.expected.column_values(3) == std::vector<Value>{-50, 50, -60, 60});
    CHECK(benchmark_from_json(benchmark_to_json(c)).output == c.output);
  }

  TEST_CASE("malformed benchmarks") {
    json j = running_json();
    j["inputs"][0]["columns"][1]["type"] = "Float";
    CHECK_THROWS_AS(benchmark_from_json(j), ParseError);

    json k = running_json();
    auto& cols = k["pending"][0]["columns"];
    std::swap(cols[0], cols[1]);
    for (auto& row : k["pending"][0]["rows"]) std::swap(row[0], row[1]);
    try {
      benchmark_from_json(k, "case");
      FAIL("expected a schema error");
    } catch (const SchemaError& e) {
      CHECK(std::string(e.what()).find("'ti'") != std::string::npos);
    }

    json m = running_json();
    m["output"]["name"] = "explode";
    CHECK_THROWS_AS(benchmark_from_json(m), SchemaError);

    CHECK_THROWS_AS(load_benchmark(source_path("benchmarks/does_not_exist.json")), ParseError);
  }

  TEST_CASE("over-fit check") {
    BenchmarkCase c = load_benchmark(source_path("benchmarks/running/shift_frames.json"));
    CHECK_FALSE(check_overfit(c, parse_program(kAppendixA)).overfit);

    // One constant Yield per example row.
    std::string per_row;
    for (int f = 1; f <= 4; ++f) {
      const auto row = fx::shift_row(f);
      per_row += "t" + std::to_string(f) + " = Filter(ti, intEq(frame, " + std::to_string(f) + "));\n";
    }
    for (int f = 1; f <= 4; ++f) {
      const auto row = fx::shift_row(f);
      per_row += "Yield(\"shift\", t" + std::to_string(f) + ", id, \"GB\", " + row[3].to_string() + ", " +
                 row[4].to_string() + ");\n";
    }
    OverfitReport r = check_overfit(c, parse_program(per_row));
    CHECK(r.overfit);
    CHECK(r.missing.size() == 4);
    CHECK(r.to_string().find("\n  - ") != std::string::npos);

    BenchmarkCase empty = c;
    empty.pending.clear();
    empty.expected = Table(c.expected.name(), c.expected.schema(), {});
    CHECK_FALSE(check_overfit(empty, parse_program(per_row)).overfit);
  }

  TEST_CASE("file entity rows") {
    // 2021-03-04T05:06:07Z
    Row r = file_entity_row("a1", "/home/u/report.final.pdf", 1200, 1614834367, true, false, true, "staff");
    const Schema& schema = [] () -> const Schema& {
      static const Schema s = [] {
        std::vector<Column> cols;
        for (const auto& f : find_builtin_domain("file")->entities[0].fields) cols.push_back({f.name, f.types[0]});
        return Schema(cols);
      }();
      return s;
    }();
    auto at = [&](const char* name) { return r[schema.index_of(name)]; };
    CHECK(at("id") == Value::id("a1"));
    CHECK(at("basename") == Value("report.final"));
    CHECK(at("extension") == Value("pdf"));
    CHECK(at("path") == Value("/home/u"));
    CHECK(at("size") == Value(1200));
    CHECK(at("readable") == Value(1));
    CHECK(at("writable") == Value(0));
    CHECK(at("year") == Value(2021));
    CHECK(at("month") == Value(3));
    CHECK(at("day") == Value(4));
    CHECK(at("month_s") == Value("03"));
    CHECK(at("day_s") == Value("04"));
    CHECK(at("year_s") == Value("2021"));
  }

  TEST_CASE("every shipped reference program reproduces its example and generalizes") {
    const auto files = benchmark_files(source_path("benchmarks"));
    CHECK(files.size() >= 12);
    for (const auto& path : files) {
      CAPTURE(path);
      BenchmarkCase c = load_benchmark(path);
      if (!c.reference_program) continue;
      Program p = parse_program(*c.reference_program);
      CHECK(exec_program(p, c.inputs, c.action) == c.output);
      CHECK_FALSE(check_overfit(c, p).overfit);
    }
  }

  TEST_CASE("benchmark directory listing") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "bee_empty_bench_dir";
    fs::create_directories(dir);
    CHECK(benchmark_files(dir.string()).empty());
    fs::remove_all(dir);
    CHECK_THROWS_AS(benchmark_files(source_path("benchmarks/none")), ParseError);
  }
}
