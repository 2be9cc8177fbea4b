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
#include <vector>

#include "bee/dsl.hpp"
#include "bee/table.hpp"
#include "bee/table_json.hpp"

namespace bee {

/// One entity field. Several types mean "any one of these", fixed per table.
struct FieldSpec {
  std::string name;
  std::vector<ColumnType> types;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Schema of one entity table. An open schema accepts trailing columns named
/// <prefix>1, <prefix>2, ... of any of `open_types`.
struct EntitySchema {
  std::string name;
  std::vector<FieldSpec> fields;
  std::optional<std::string> open_prefix;
  std::vector<ColumnType> open_types;

  bool accepts(const Schema& schema) const;
  friend bool operator==(const EntitySchema&, const EntitySchema&) = default;
};

struct DomainSpec {
  std::string name;
  std::vector<EntitySchema> entities;
  std::vector<ActionSignature> actions;

  const ActionSignature* find_action(std::string_view action) const;
  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

/// File management, spreadsheet and XML, as used by the shipped benchmarks.
const std::vector<DomainSpec>& builtin_domains();
const DomainSpec* find_builtin_domain(std::string_view name);

json domain_to_json(const DomainSpec& domain);
DomainSpec domain_from_json(const json& j);

struct BenchmarkCase {
  std::string id;
  DomainSpec domain;
  std::string description;
  std::vector<Table> inputs;
  Table output;
  ActionSignature action;
  std::vector<Value> constants;
  std::vector<Table> pending;
  Table expected;
  std::optional<std::string> reference_program;
  bool regression = false;
};

/// Reads and validates one benchmark file. Throws ParseError for malformed
/// JSON and SchemaError naming the offending table on structural mismatch.
BenchmarkCase load_benchmark(const std::string& path);
BenchmarkCase benchmark_from_json(const json& j, const std::string& origin = "<json>");
json benchmark_to_json(const BenchmarkCase& c);

/// Benchmark files under `dir` (recursively), sorted by path.
std::vector<std::string> benchmark_files(const std::string& dir);

struct OverfitReport {
  bool overfit = false;
  std::vector<Row> missing;  // expected but not produced
  std::vector<Row> extra;    // produced but not expected
  std::string diagnostic;

  std::string to_string() const;
};

/// Runs `program` on the pending tables and compares with the expected output.
OverfitReport check_overfit(const BenchmarkCase& c, const Program& program);

/// A file-domain entity row; the derived fields (basename, extension, date
/// parts) are computed from `file_path` and the epoch-seconds `mtime`.
Row file_entity_row(const std::string& id, const std::string& file_path, std::int64_t size, std::int64_t mtime,
                    bool readable, bool writable, bool executable, const std::string& group);

}  // namespace bee
