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

#include "bee/table_json.hpp"

#include <fstream>
#include <sstream>

#include "bee/error.hpp"

namespace bee {

json value_to_json(const Value& value) {
  switch (value.type()) {
    case ColumnType::Int:
      return value.as_int();
    case ColumnType::Str:
      return value.as_str();
    case ColumnType::Id:
      return json{{"id", value.id_label()}};
  }
  return nullptr;
}

Value value_from_json(const json& j) {
  if (j.is_number_integer()) return Value(j.get<std::int64_t>());
  if (j.is_string()) return Value(j.get<std::string>());
  if (j.is_object() && j.size() == 1 && j.contains("id") && j["id"].is_string()) {
    return Value::id(j["id"].get<std::string>());
  }
  throw ParseError("not a cell value: " + j.dump());
}

json schema_to_json(const Schema& schema) {
  json cols = json::array();
  for (const auto& col : schema.columns()) {
    cols.push_back(json{{"name", col.name}, {"type", std::string(to_string(col.type))}});
  }
  return cols;
}

Schema schema_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("columns must be an array");
  std::vector<Column> cols;
  for (const auto& c : j) {
    if (!c.is_object() || !c.contains("name") || !c.contains("type") || !c["name"].is_string() ||
        !c["type"].is_string()) {
      throw ParseError("column entries need string 'name' and 'type': " + c.dump());
    }
    cols.push_back(Column{c["name"].get<std::string>(), parse_column_type(c["type"].get<std::string>())});
  }
  try {
    return Schema(std::move(cols));
  } catch (const SchemaError& e) {
    throw ParseError(e.what());
  }
}

json table_to_json(const Table& table) {
  json rows = json::array();
  for (const auto& row : table.rows()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(value_to_json(v));
    rows.push_back(std::move(r));
  }
  return json{{"name", table.name()}, {"columns", schema_to_json(table.schema())}, {"rows", rows}};
}

Table table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("name") || !j.contains("columns") || !j.contains("rows")) {
    throw ParseError("table object needs 'name', 'columns' and 'rows'");
  }
  if (!j["name"].is_string()) throw ParseError("table name must be a string");
  std::string name = j["name"].get<std::string>();
  Schema schema = schema_from_json(j["columns"]);
  if (!j["rows"].is_array()) throw ParseError("rows of table '" + name + "' must be an array");
  std::vector<Row> rows;
  for (const auto& r : j["rows"]) {
    if (!r.is_array()) throw ParseError("row of table '" + name + "' must be an array");
    Row row;
    for (const auto& cell : r) row.push_back(value_from_json(cell));
    rows.push_back(std::move(row));
  }
  try {
    return Table(std::move(name), std::move(schema), std::move(rows));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

}  // namespace bee
