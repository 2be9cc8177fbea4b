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

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>

namespace bee {

enum class ColumnType { Int, Str, Id };

std::string_view to_string(ColumnType type);
/// Parses "Int", "Str" or "Id". Throws ParseError on anything else.
ColumnType parse_column_type(std::string_view text);

/// Opaque entity identity. Only equality is meaningful to programs; the
/// label ordering exists so tables can be stored canonically.
struct IdLabel {
  std::string label;

  friend bool operator==(const IdLabel&, const IdLabel&) = default;
  friend auto operator<=>(const IdLabel&, const IdLabel&) = default;
};

class Value {
 public:
  Value() : data_(std::int64_t{0}) {}
  Value(std::int64_t v) : data_(v) {}  // NOLINT(google-explicit-constructor)
  Value(int v) : data_(std::int64_t{v}) {}  // NOLINT(google-explicit-constructor)
  Value(std::string v) : data_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Value(const char* v) : data_(std::string(v)) {}  // NOLINT(google-explicit-constructor)
  Value(IdLabel v) : data_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  static Value id(std::string label) { return Value(IdLabel{std::move(label)}); }

  ColumnType type() const { return static_cast<ColumnType>(data_.index()); }
  bool is_int() const { return data_.index() == 0; }
  bool is_str() const { return data_.index() == 1; }
  bool is_id() const { return data_.index() == 2; }

  std::int64_t as_int() const;
  const std::string& as_str() const;
  const std::string& id_label() const;

  /// Program-text rendering: `-5`, `"GB"`, `id("f1")`.
  std::string to_string() const;
  std::size_t hash() const;

  // Values of different types are never equal. The cross-type order (Int <
  // Str < Id) is only used for canonical storage.
  friend bool operator==(const Value&, const Value&) = default;
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  std::variant<std::int64_t, std::string, IdLabel> data_;
};

std::string quote_string(std::string_view s);

namespace arith {

std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
/// Division rounding toward negative infinity. d must be nonzero.
std::int64_t floor_div(std::int64_t x, std::int64_t d);
/// Remainder in [0, |d|) for d > 0.
std::int64_t floor_mod(std::int64_t x, std::int64_t d);

}  // namespace arith

}  // namespace bee

template <>
struct std::hash<bee::Value> {
  std::size_t operator()(const bee::Value& v) const noexcept { return v.hash(); }
};
