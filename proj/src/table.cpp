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

#include "bee/table.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <unordered_set>

#include "bee/error.hpp"

namespace bee {

Schema::Schema(std::vector<Column> columns) : columns_(std::move(columns)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& col : columns_) {
    if (!seen.insert(col.name).second) {
      throw SchemaError("duplicate column name '" + col.name + "'");
    }
  }
}

std::optional<std::size_t> Schema::find(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Schema::index_of(std::string_view name) const {
  if (auto idx = find(name)) return *idx;
  throw SchemaError("unknown column '" + std::string(name) + "' in schema " + to_string());
}

std::string Schema::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i > 0) out += ", ";
    out += columns_[i].name;
    out += ':';
    out += bee::to_string(columns_[i].type);
  }
  out += '>';
  return out;
}

Table::Table(std::string name, Schema schema, std::vector<Row> rows)
    : name_(std::move(name)), schema_(std::move(schema)), rows_(std::move(rows)) {
  if (schema_.empty()) {
    throw SchemaError("table '" + name_ + "' must have at least one column");
  }
  for (const auto& row : rows_) {
    if (row.size() != schema_.size()) {
      throw SchemaError("row arity " + std::to_string(row.size()) + " does not match schema " +
                        schema_.to_string() + " of table '" + name_ + "'");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c].type() != schema_[c].type) {
        throw TypeMismatch("value " + row[c].to_string() + " in column '" + schema_[c].name +
                           "' of table '" + name_ + "' is not " +
                           std::string(bee::to_string(schema_[c].type)));
      }
    }
  }
  if (!std::is_sorted(rows_.begin(), rows_.end())) std::sort(rows_.begin(), rows_.end());
  rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
}

const Value& Table::fetch(std::size_t row, std::string_view column) const {
  std::size_t col = schema_.index_of(column);
  if (row >= rows_.size()) {
    throw LookupError("row " + std::to_string(row) + " out of range for table '" + name_ +
                      "' with " + std::to_string(rows_.size()) + " rows");
  }
  return rows_[row][col];
}

std::optional<std::size_t> Table::find_row(const Row& row) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), row);
  if (it == rows_.end() || *it != row) return std::nullopt;
  return static_cast<std::size_t>(it - rows_.begin());
}

std::vector<Value> Table::column_values(std::size_t col) const {
  std::vector<Value> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row[col]);
  return out;
}

Table Table::renamed(std::string name) const {
  Table copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::size_t Table::content_hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& col : schema_.columns()) {
    mix(std::hash<std::string>{}(col.name));
    mix(static_cast<std::size_t>(col.type));
  }
  for (const auto& row : rows_) {
    for (const auto& v : row) mix(v.hash());
  }
  return h;
}

Table project(const Table& table, std::span<const std::string> columns) {
  if (columns.empty()) {
    throw InvalidProjection("projection of table '" + table.name() + "' onto zero columns");
  }
  std::vector<std::size_t> idx;
  std::vector<Column> cols;
  for (const auto& name : columns) {
    idx.push_back(table.schema().index_of(name));
    cols.push_back(table.schema()[idx.back()]);
  }
  std::vector<Row> rows;
  rows.reserve(table.row_count());
  for (const auto& row : table.rows()) {
    Row out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(row[i]);
    rows.push_back(std::move(out));
  }
  return Table(table.name(), Schema(std::move(cols)), std::move(rows));
}

Table append_column(const Table& table, std::string name, ColumnType type,
                    std::vector<Value> values) {
  if (values.size() != table.row_count()) {
    throw SchemaError("append_column: " + std::to_string(values.size()) + " values for " +
                      std::to_string(table.row_count()) + " rows of table '" + table.name() + "'");
  }
  if (table.schema().contains(name)) {
    throw SchemaError("append_column: column '" + name + "' already exists in table '" +
                      table.name() + "'");
  }
  std::vector<Column> cols = table.schema().columns();
  cols.push_back(Column{std::move(name), type});
  std::vector<Row> rows = table.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(std::move(values[i]));
  // Prefixes are distinct and already sorted, so the canonical order is kept.
  return Table(table.name(), Schema(std::move(cols)), std::move(rows));
}

Table union_tables(const Table& a, const Table& b) {
  if (a.schema() != b.schema()) {
    throw SchemaError("union of tables with different schemas " + a.schema().to_string() +
                      " and " + b.schema().to_string());
  }
  std::vector<Row> rows;
  rows.reserve(a.row_count() + b.row_count());
  std::merge(a.rows().begin(), a.rows().end(), b.rows().begin(), b.rows().end(),
             std::back_inserter(rows));
  return Table(a.name(), a.schema(), std::move(rows));
}

std::string render_table(const Table& table) {
  std::vector<std::size_t> width(table.column_count());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t c = 0; c < table.column_count(); ++c) width[c] = table.schema()[c].name.size();
  for (const auto& row : table.rows()) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line.push_back(row[c].to_string());
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  std::ostringstream out;
  out << table.name() << '\n';
  for (std::size_t c = 0; c < table.column_count(); ++c) {
    out << (c ? " | " : "") << std::left << std::setw(static_cast<int>(width[c]))
        << table.schema()[c].name;
  }
  out << '\n';
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << (c ? " | " : "") << std::left << std::setw(static_cast<int>(width[c])) << line[c];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace bee
