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

// Tokenizer shared by the feature and program text parsers.

#include <cstdint>
#include <string>
#include <string_view>

namespace bee::detail {

enum class Tok { End, Ident, Int, String, Char, Sym };

struct Token {
  Tok kind = Tok::End;
  std::string text;  // identifier, decoded string/char, or the symbol
  std::int64_t number = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view source);

  const Token& peek() const { return current_; }
  Token next();

  bool at_sym(char c) const { return current_.kind == Tok::Sym && current_.text[0] == c; }
  bool at_ident(std::string_view name) const {
    return current_.kind == Tok::Ident && current_.text == name;
  }
  bool at_end() const { return current_.kind == Tok::End; }

  void expect_sym(char c);
  std::string expect_ident();
  std::int64_t expect_int();
  std::string expect_string();

  /// Throws ParseError annotated with the current position.
  [[noreturn]] void fail(const std::string& message) const;

 private:
  Token scan();
  char decode_escape();

  std::string source_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
  Token current_;
};

/// True when `name` can be written without backticks.
bool is_plain_identifier(std::string_view name);
/// Column or table name as it appears in program text.
std::string format_identifier(std::string_view name);

}  // namespace bee::detail
