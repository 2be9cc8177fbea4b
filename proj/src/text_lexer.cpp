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

#include "text_lexer.hpp"

#include <cctype>
#include <limits>

#include "bee/error.hpp"

namespace bee::detail {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

}  // namespace

Lexer::Lexer(std::string_view source) : source_(source) { current_ = scan(); }

Token Lexer::next() {
  Token t = current_;
  current_ = scan();
  return t;
}

void Lexer::fail(const std::string& message) const {
  throw ParseError("line " + std::to_string(current_.line) + ", column " +
                   std::to_string(current_.column) + ": " + message);
}

void Lexer::expect_sym(char c) {
  if (!at_sym(c)) fail(std::string("expected '") + c + "'");
  next();
}

std::string Lexer::expect_ident() {
  if (current_.kind != Tok::Ident) fail("expected identifier");
  return next().text;
}

std::int64_t Lexer::expect_int() {
  if (current_.kind != Tok::Int) fail("expected integer");
  return next().number;
}

std::string Lexer::expect_string() {
  if (current_.kind != Tok::String) fail("expected string literal");
  return next().text;
}

char Lexer::decode_escape() {
  if (pos_ >= source_.size()) fail("unterminated escape");
  char c = source_[pos_++];
  switch (c) {
    case 'n':
      return '\n';
    case 't':
      return '\t';
    case '\\':
    case '"':
    case '\'':
    case '`':
      return c;
    default:
      fail(std::string("unknown escape '\\") + c + "'");
  }
}

Token Lexer::scan() {
  // Whitespace and // comments.
  while (pos_ < source_.size()) {
    char c = source_[pos_];
    if (c == '\n') {
      ++pos_;
      ++line_;
      line_start_ = pos_;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos_;
    } else if (c == '/' && pos_ + 1 < source_.size() && source_[pos_ + 1] == '/') {
      while (pos_ < source_.size() && source_[pos_] != '\n') ++pos_;
    } else {
      break;
    }
  }
  Token tok;
  tok.line = line_;
  tok.column = pos_ - line_start_ + 1;
  if (pos_ >= source_.size()) return tok;

  char c = source_[pos_];
  bool negative_number = c == '-' && pos_ + 1 < source_.size() &&
                         std::isdigit(static_cast<unsigned char>(source_[pos_ + 1]));
  if (std::isdigit(static_cast<unsigned char>(c)) || negative_number) {
    std::size_t start = pos_;
    if (negative_number) ++pos_;
    while (pos_ < source_.size() && std::isdigit(static_cast<unsigned char>(source_[pos_]))) ++pos_;
    tok.kind = Tok::Int;
    tok.text = source_.substr(start, pos_ - start);
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok.text, &used);
      tok.number = v;
    } catch (const std::exception&) {
      current_ = tok;
      fail("integer literal out of range: " + tok.text);
    }
    return tok;
  }
  if (ident_start(c)) {
    std::size_t start = pos_;
    while (pos_ < source_.size() && ident_char(source_[pos_])) ++pos_;
    tok.kind = Tok::Ident;
    tok.text = source_.substr(start, pos_ - start);
    return tok;
  }
  if (c == '"' || c == '`') {
    char quote = c;
    ++pos_;
    std::string text;
    while (true) {
      if (pos_ >= source_.size()) {
        current_ = tok;
        fail("unterminated literal");
      }
      char ch = source_[pos_++];
      if (ch == quote) break;
      if (ch == '\\') {
        text += decode_escape();
      } else {
        text += ch;
      }
    }
    tok.kind = quote == '"' ? Tok::String : Tok::Ident;
    tok.text = std::move(text);
    return tok;
  }
  if (c == '\'') {
    ++pos_;
    if (pos_ >= source_.size()) fail("unterminated character literal");
    char ch = source_[pos_++];
    if (ch == '\\') ch = decode_escape();
    if (pos_ >= source_.size() || source_[pos_] != '\'') {
      current_ = tok;
      fail("unterminated character literal");
    }
    ++pos_;
    tok.kind = Tok::Char;
    tok.text = std::string(1, ch);
    return tok;
  }
  ++pos_;
  tok.kind = Tok::Sym;
  tok.text = std::string(1, c);
  return tok;
}

bool is_plain_identifier(std::string_view name) {
  if (name.empty() || !ident_start(name[0])) return false;
  for (char c : name) {
    if (!ident_char(c)) return false;
  }
  return true;
}

std::string format_identifier(std::string_view name) {
  if (is_plain_identifier(name)) return std::string(name);
  std::string out = "`";
  for (char c : name) {
    if (c == '`' || c == '\\') out += '\\';
    out += c;
  }
  out += '`';
  return out;
}

}  // namespace bee::detail
