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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bee/value.hpp"

namespace bee {

struct Column {
  std::string name;
  ColumnType type;

  friend bool operator==(const Column&, const Column&) = default;
};

/// Ordered list of uniquely named, typed columns.
class Schema {
 public:
  Schema() = default;
  explicit Schema(std::vector<Column> columns);

  std::size_t size() const { return columns_.size(); }
  bool empty() const { return columns_.empty(); }
  const Column& operator[](std::size_t i) const { return columns_[i]; }
  const std::vector<Column>& columns() const { return columns_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws SchemaError when the column does not exist.
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  std::string to_string() const;

  friend bool operator==(const Schema&, const Schema&) = default;

 private:
  std::vector<Column> columns_;
};

using Row = std::vector<Value>;

/// A named, typed set of rows.
///
/// Rows are kept sorted and deduplicated, so two tables with the same schema
/// and the same row set are indistinguishable apart from their names. A row
/// is addressed either by value or by its index in that canonical order.
class Table {
 public:
  /// Validates arity and cell types, then sorts and deduplicates `rows`.
  /// Throws SchemaError for a zero-column schema and TypeMismatch for a cell
  /// whose type disagrees with its column.
  Table(std::string name, Schema schema, std::vector<Row> rows);

  const std::string& name() const { return name_; }
  const Schema& schema() const { return schema_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t column_count() const { return schema_.size(); }
  bool empty() const { return rows_.empty(); }

  const Value& at(std::size_t row, std::size_t col) const { return rows_[row][col]; }
  /// Cell lookup by canonical row index and column name.
  const Value& fetch(std::size_t row, std::string_view column) const;
  std::optional<std::size_t> find_row(const Row& row) const;

  std::vector<Value> column_values(std::size_t col) const;
  Table renamed(std::string name) const;

  /// Hash over schema and rows; the name does not participate.
  std::size_t content_hash() const;

  /// Content equality: schema and rows. Names are labels only.
  friend bool operator==(const Table& a, const Table& b) {
    return a.schema_ == b.schema_ && a.rows_ == b.rows_;
  }

 private:
  std::string name_;
  Schema schema_;
  std::vector<Row> rows_;
};

/// Keeps `columns` in the given order and deduplicates the resulting rows.
Table project(const Table& table, std::span<const std::string> columns);

/// Appends one column. `values[i]` goes to canonical row i.
Table append_column(const Table& table, std::string name, ColumnType type,
                    std::vector<Value> values);

/// Set union of two tables with identical schemas. The result takes the
/// first table's name.
Table union_tables(const Table& a, const Table& b);

/// Human-readable grid used in diagnostics and the CLI.
std::string render_table(const Table& table);

}  // namespace bee
