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

#include "bee/value.hpp"

#include <sstream>

#include "bee/error.hpp"

namespace bee {

std::string_view to_string(ColumnType type) {
  switch (type) {
    case ColumnType::Int:
      return "Int";
    case ColumnType::Str:
      return "Str";
    case ColumnType::Id:
      return "Id";
  }
  return "?";
}

ColumnType parse_column_type(std::string_view text) {
  if (text == "Int") return ColumnType::Int;
  if (text == "Str") return ColumnType::Str;
  if (text == "Id") return ColumnType::Id;
  throw ParseError("unknown column type '" + std::string(text) + "'");
}

std::int64_t Value::as_int() const {
  if (const auto* v = std::get_if<std::int64_t>(&data_)) return *v;
  throw TypeMismatch("expected Int value, got " + to_string());
}

const std::string& Value::as_str() const {
  if (const auto* v = std::get_if<std::string>(&data_)) return *v;
  throw TypeMismatch("expected Str value, got " + to_string());
}

const std::string& Value::id_label() const {
  if (const auto* v = std::get_if<IdLabel>(&data_)) return v->label;
  throw TypeMismatch("expected Id value, got " + to_string());
}

std::string quote_string(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out += ch;
    }
  }
  out += '"';
  return out;
}

std::string Value::to_string() const {
  switch (data_.index()) {
    case 0:
      return std::to_string(std::get<0>(data_));
    case 1:
      return quote_string(std::get<1>(data_));
    default:
      return "id(" + quote_string(std::get<2>(data_).label) + ")";
  }
}

std::size_t Value::hash() const {
  std::size_t seed = data_.index() * 0x9e3779b97f4a7c15ULL;
  std::size_t h = 0;
  switch (data_.index()) {
    case 0:
      h = std::hash<std::int64_t>{}(std::get<0>(data_));
      break;
    case 1:
      h = std::hash<std::string>{}(std::get<1>(data_));
      break;
    default:
      h = std::hash<std::string>{}(std::get<2>(data_).label);
  }
  return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.data_.index() != b.data_.index()) return a.data_.index() <=> b.data_.index();
  switch (a.data_.index()) {
    case 0:
      return std::get<0>(a.data_) <=> std::get<0>(b.data_);
    case 1: {
      int c = std::get<1>(a.data_).compare(std::get<1>(b.data_));
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    default: {
      int c = std::get<2>(a.data_).label.compare(std::get<2>(b.data_).label);
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
  }
}

namespace arith {

namespace {

[[noreturn]] void overflow(const char* op, std::int64_t a, std::int64_t b) {
  std::ostringstream msg;
  msg << "integer overflow in " << op << "(" << a << ", " << b << ")";
  throw OverflowError(msg.str());
}

}  // namespace

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) overflow("add", a, b);
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) overflow("sub", a, b);
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) overflow("mul", a, b);
  return r;
}

std::int64_t floor_div(std::int64_t x, std::int64_t d) {
  if (d == 0) throw OverflowError("division by zero");
  if (d == -1) return sub(0, x);
  std::int64_t q = x / d;
  if ((x % d != 0) && ((x < 0) != (d < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t x, std::int64_t d) {
  if (d == 0) throw OverflowError("modulo by zero");
  std::int64_t m = x % d;
  if (m < 0) m += (d < 0 ? -d : d);
  return m;
}

}  // namespace arith

}  // namespace bee
