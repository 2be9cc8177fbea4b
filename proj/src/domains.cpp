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

#include "bee/domains.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <set>
#include <sstream>

#include "bee/error.hpp"
#include "bee/interpreter.hpp"
#include "bee/program_text.hpp"
#include "bee/validate.hpp"

namespace bee {

bool EntitySchema::accepts(const Schema& schema) const {
  auto allowed = [](const std::vector<ColumnType>& types, ColumnType t) {
    return std::find(types.begin(), types.end(), t) != types.end();
  };
  if (schema.size() < fields.size()) return false;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (schema[i].name != fields[i].name || !allowed(fields[i].types, schema[i].type)) return false;
  }
  if (!open_prefix) return schema.size() == fields.size();
  for (std::size_t i = fields.size(), k = 1; i < schema.size(); ++i, ++k) {
    if (schema[i].name != *open_prefix + std::to_string(k) || !allowed(open_types, schema[i].type)) return false;
  }
  return true;
}

const ActionSignature* DomainSpec::find_action(std::string_view action) const {
  for (const auto& a : actions) {
    if (a.name == action) return &a;
  }
  return nullptr;
}

namespace {

constexpr ColumnType I = ColumnType::Int;
constexpr ColumnType S = ColumnType::Str;
constexpr ColumnType D = ColumnType::Id;

ActionSignature act(std::string name, std::vector<Column> args) { return {std::move(name), std::move(args)}; }

std::vector<DomainSpec> make_builtins() {
  DomainSpec file{"file",
                  {EntitySchema{"file",
                                {{"id", {D}},
                                 {"basename", {S}},
                                 {"extension", {S}},
                                 {"path", {S}},
                                 {"size", {I}},
                                 {"modification_time", {I}},
                                 {"readable", {I}},
                                 {"writable", {I}},
                                 {"executable", {I}},
                                 {"group", {S}},
                                 {"year", {I}},
                                 {"month", {I}},
                                 {"day", {I}},
                                 {"year_s", {S}},
                                 {"month_s", {S}},
                                 {"day_s", {S}}},
                                std::nullopt,
                                {}}},
                  {act("chmod", {{"id", D}, {"mod", S}}),
                   act("copy", {{"id", D}, {"path", S}}),
                   act("unzip", {{"id", D}, {"path", S}}),
                   act("move", {{"id", D}, {"path", S}}),
                   act("rename", {{"id", D}, {"name", S}}),
                   act("delete", {{"id", D}}),
                   act("chgrp", {{"id", D}, {"group", S}}),
                   act("chext", {{"id", D}, {"extension", S}}),
                   act("tar", {{"id", D}, {"name", S}})}};

  DomainSpec sheet{"spreadsheet",
                   {EntitySchema{"cells",
                                 {{"id", {D}},
                                  {"row", {I}},
                                  {"col", {I}},
                                  {"row_head", {S, I}},
                                  {"col_head", {S, I}},
                                  {"content", {S, I}},
                                  {"read_ord", {I}}},
                                 std::nullopt,
                                 {}},
                    EntitySchema{"tabular", {{"row", {I}}}, std::string("col"), {S, I}}},
                   {act("fill", {{"content", S}, {"row", I}, {"col", I}})}};

  DomainSpec xml{"xml",
                 {EntitySchema{"elements",
                               {{"id", {D}},
                                {"tag", {S}},
                                {"text", {S}},
                                {"parent", {D}},
                                {"previous", {D}},
                                {"next", {D}}},
                               std::nullopt,
                               {}},
                  EntitySchema{"attributes",
                               {{"id", {D}}, {"element", {D}}, {"key", {S}}, {"value", {S}}},
                               std::nullopt,
                               {}}},
                 {act("delete_element", {{"element", D}}),
                  act("modify_text", {{"element", D}, {"text", S}}),
                  act("modify_attribute", {{"element", D}, {"value", S}}),
                  act("modify_tag", {{"element", D}, {"tag", S}}),
                  act("add_element", {{"parent", D}, {"tag", S}, {"text", S}}),
                  act("add_element_above", {{"element", D}, {"tag", S}, {"text", S}}),
                  act("add_attribute", {{"element", D}, {"key", S}, {"value", S}}),
                  act("wrap", {{"element", D}, {"tag", S}}),
                  act("move_below", {{"element", D}, {"target", D}}),
                  act("append_child", {{"element", D}, {"target", D}})}};
  return {file, sheet, xml};
}

json types_to_json(const std::vector<ColumnType>& types) {
  if (types.size() == 1) return std::string(to_string(types[0]));
  json arr = json::array();
  for (auto t : types) arr.push_back(std::string(to_string(t)));
  return arr;
}

std::vector<ColumnType> types_from_json(const json& j) {
  std::vector<ColumnType> out;
  if (j.is_string()) {
    out.push_back(parse_column_type(j.get<std::string>()));
  } else if (j.is_array() && !j.empty()) {
    for (const auto& t : j) {
      if (!t.is_string()) throw ParseError("field type must be a string: " + t.dump());
      out.push_back(parse_column_type(t.get<std::string>()));
    }
  } else {
    throw ParseError("field type must be a string or a nonempty array: " + j.dump());
  }
  return out;
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing '" + key + "'");
  return j.at(key);
}

std::string require_string(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_string()) throw ParseError(where + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<Table> tables_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be an array of tables");
  std::vector<Table> out;
  for (const auto& t : j) out.push_back(table_from_json(t));
  return out;
}

std::string row_text(const Row& row) {
  std::string s = "(";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) s += ", ";
    s += row[i].to_string();
  }
  return s + ")";
}

}  // namespace

const std::vector<DomainSpec>& builtin_domains() {
  static const std::vector<DomainSpec> domains = make_builtins();
  return domains;
}

const DomainSpec* find_builtin_domain(std::string_view name) {
  for (const auto& d : builtin_domains()) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

json domain_to_json(const DomainSpec& domain) {
  json entities = json::array();
  for (const auto& e : domain.entities) {
    json fields = json::array();
    for (const auto& f : e.fields) fields.push_back(json{{"name", f.name}, {"type", types_to_json(f.types)}});
    json ej{{"name", e.name}, {"fields", fields}};
    if (e.open_prefix) ej["open"] = json{{"prefix", *e.open_prefix}, {"type", types_to_json(e.open_types)}};
    entities.push_back(std::move(ej));
  }
  json actions = json::array();
  for (const auto& a : domain.actions) {
    actions.push_back(json{{"name", a.name}, {"args", schema_to_json(Schema(a.args))}});
  }
  return json{{"name", domain.name}, {"entities", entities}, {"actions", actions}};
}

DomainSpec domain_from_json(const json& j) {
  DomainSpec d;
  d.name = require_string(j, "name", "domain");
  const std::string where = "domain '" + d.name + "'";
  const json& entities = require(j, "entities", where);
  if (!entities.is_array()) throw ParseError(where + ": 'entities' must be an array");
  for (const auto& ej : entities) {
    EntitySchema e;
    e.name = require_string(ej, "name", where + " entity");
    const json& fields = require(ej, "fields", where + " entity '" + e.name + "'");
    if (!fields.is_array()) throw ParseError(where + ": fields must be an array");
    std::set<std::string> names;
    for (const auto& fj : fields) {
      FieldSpec f{require_string(fj, "name", where + " field"), types_from_json(require(fj, "type", where))};
      if (!names.insert(f.name).second) throw SchemaError(where + ": duplicate field '" + f.name + "'");
      e.fields.push_back(std::move(f));
    }
    if (ej.contains("open")) {
      e.open_prefix = require_string(ej["open"], "prefix", where + " open");
      e.open_types = types_from_json(require(ej["open"], "type", where + " open"));
    }
    d.entities.push_back(std::move(e));
  }
  const json& actions = require(j, "actions", where);
  if (!actions.is_array()) throw ParseError(where + ": 'actions' must be an array");
  for (const auto& aj : actions) {
    ActionSignature a{require_string(aj, "name", where + " action"), {}};
    a.args = schema_from_json(require(aj, "args", where + " action '" + a.name + "'")).columns();
    if (d.find_action(a.name)) throw SchemaError(where + ": duplicate action '" + a.name + "'");
    a.output_schema();  // rejects duplicate argument names, including "action"
    d.actions.push_back(std::move(a));
  }
  return d;
}

BenchmarkCase benchmark_from_json(const json& j, const std::string& origin) {
  if (!j.is_object()) throw ParseError(origin + ": benchmark must be a JSON object");
  try {
    std::string id = require_string(j, "id", origin);
    const json& dj = require(j, "domain", origin);
    DomainSpec domain;
    if (dj.is_string()) {
      const DomainSpec* builtin = find_builtin_domain(dj.get<std::string>());
      if (!builtin) throw SchemaError(origin + ": unknown domain '" + dj.get<std::string>() + "'");
      domain = *builtin;
    } else {
      domain = domain_from_json(dj);
    }
    std::string description = j.contains("description") ? require_string(j, "description", origin) : "";
    std::vector<Table> inputs = tables_from_json(require(j, "inputs", origin), "inputs");
    Table output = table_from_json(require(j, "output", origin));
    std::vector<Value> constants;
    if (j.contains("constants")) {
      if (!j["constants"].is_array()) throw ParseError(origin + ": 'constants' must be an array");
      for (const auto& v : j["constants"]) constants.push_back(value_from_json(v));
    }
    std::vector<Table> pending =
        j.contains("pending") ? tables_from_json(j["pending"], "pending") : std::vector<Table>{};
    Table expected = j.contains("expected") ? table_from_json(j["expected"])
                                            : Table(output.name(), output.schema(), {});
    std::optional<std::string> reference;
    if (j.contains("reference_program")) reference = require_string(j, "reference_program", origin);
    bool regression = false;
    if (j.contains("regression")) {
      if (!j["regression"].is_boolean()) throw ParseError(origin + ": 'regression' must be a boolean");
      regression = j["regression"].get<bool>();
    }

    // The action is named by the output table.
    const ActionSignature* action = domain.find_action(output.name());
    if (!action) {
      throw SchemaError(origin + ": output table '" + output.name() + "' names no action of domain '" +
                        domain.name + "'");
    }

    std::set<std::string> names;
    for (const auto& t : inputs) {
      if (!names.insert(t.name()).second) throw SchemaError(origin + ": duplicate input table '" + t.name() + "'");
      bool ok = std::any_of(domain.entities.begin(), domain.entities.end(),
                            [&](const EntitySchema& e) { return e.accepts(t.schema()); });
      if (!ok) {
        throw SchemaError(origin + ": input table '" + t.name() + "' " + t.schema().to_string() +
                          " fits no entity schema of domain '" + domain.name + "'");
      }
    }
    auto check_action_table = [&](const Table& t, const char* what) {
      if (!(t.schema() == action->output_schema())) {
        throw SchemaError(origin + ": " + what + " table '" + t.name() + "' " + t.schema().to_string() +
                          " does not match action signature " + action->output_schema().to_string());
      }
      for (const auto& row : t.rows()) {
        if (!(row[0] == Value(action->name))) {
          throw SchemaError(origin + ": " + what + " table '" + t.name() + "' has a row of another action");
        }
      }
    };
    check_action_table(output, "output");
    check_action_table(expected, "expected");
    if (!pending.empty()) {
      if (pending.size() != inputs.size()) {
        throw SchemaError(origin + ": pending data has " + std::to_string(pending.size()) + " tables, inputs have " +
                          std::to_string(inputs.size()));
      }
      for (std::size_t k = 0; k < inputs.size(); ++k) {
        if (pending[k].name() != inputs[k].name() || !(pending[k].schema() == inputs[k].schema())) {
          throw SchemaError(origin + ": pending table '" + pending[k].name() + "' " +
                            pending[k].schema().to_string() + " differs in structure from input table '" +
                            inputs[k].name() + "' " + inputs[k].schema().to_string());
        }
      }
    }
    ActionSignature sig = *action;
    return BenchmarkCase{std::move(id),
                         std::move(domain),
                         std::move(description),
                         std::move(inputs),
                         std::move(output),
                         std::move(sig),
                         std::move(constants),
                         std::move(pending),
                         std::move(expected),
                         std::move(reference),
                         regression};
  } catch (const json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

BenchmarkCase load_benchmark(const std::string& path) { return benchmark_from_json(read_json_file(path), path); }

json benchmark_to_json(const BenchmarkCase& c) {
  json j;
  j["id"] = c.id;
  const DomainSpec* builtin = find_builtin_domain(c.domain.name);
  if (builtin && *builtin == c.domain) {
    j["domain"] = c.domain.name;
  } else {
    j["domain"] = domain_to_json(c.domain);
  }
  j["description"] = c.description;
  j["inputs"] = json::array();
  for (const auto& t : c.inputs) j["inputs"].push_back(table_to_json(t));
  j["output"] = table_to_json(c.output);
  j["constants"] = json::array();
  for (const auto& v : c.constants) j["constants"].push_back(value_to_json(v));
  j["pending"] = json::array();
  for (const auto& t : c.pending) j["pending"].push_back(table_to_json(t));
  j["expected"] = table_to_json(c.expected);
  if (c.reference_program) j["reference_program"] = *c.reference_program;
  j["regression"] = c.regression;
  return j;
}

std::vector<std::string> benchmark_files(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> out;
  if (!fs::is_directory(dir)) throw ParseError("not a directory: '" + dir + "'");
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string OverfitReport::to_string() const {
  if (!overfit) return "consistent";
  std::ostringstream s;
  s << "overfit";
  if (!diagnostic.empty()) s << ": " << diagnostic;
  for (const auto& r : missing) s << "\n  - " << row_text(r);
  for (const auto& r : extra) s << "\n  + " << row_text(r);
  return s.str();
}

OverfitReport check_overfit(const BenchmarkCase& c, const Program& program) {
  OverfitReport report;
  if (c.pending.empty()) return report;
  try {
    Table produced = exec_program(program, c.pending, c.action);
    const auto& want = c.expected.rows();
    const auto& got = produced.rows();
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(report.missing));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(report.extra));
    report.overfit = !report.missing.empty() || !report.extra.empty();
  } catch (const Error& e) {
    report.overfit = true;
    report.diagnostic = std::string("execution on pending data failed: ") + e.what();
  }
  return report;
}

Row file_entity_row(const std::string& id, const std::string& file_path, std::int64_t size, std::int64_t mtime,
                    bool readable, bool writable, bool executable, const std::string& group) {
  std::filesystem::path p(file_path);
  std::string extension = p.extension().string();
  if (!extension.empty()) extension.erase(0, 1);
  std::string dir = p.parent_path().string();

  using namespace std::chrono;
  const auto days = floor<std::chrono::days>(sys_seconds{seconds{mtime}});
  const year_month_day ymd{days};
  const int y = static_cast<int>(ymd.year());
  const int m = static_cast<int>(static_cast<unsigned>(ymd.month()));
  const int d = static_cast<int>(static_cast<unsigned>(ymd.day()));
  auto two = [](int v) { return (v < 10 ? "0" : "") + std::to_string(v); };

  return {Value::id(id),
          p.stem().string(),
          extension,
          dir,
          size,
          mtime,
          readable ? 1 : 0,
          writable ? 1 : 0,
          executable ? 1 : 0,
          group,
          y,
          m,
          d,
          std::to_string(y),
          two(m),
          two(d)};
}

}  // namespace bee
