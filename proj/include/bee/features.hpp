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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bee/value.hpp"

namespace bee {

// ---------------------------------------------------------------------------
// Token classes and extraction

enum class TokenKind { Digits, Alnum, Alpha, Lower, Upper, Whitespace, Punct };

/// A character class. Punct matches exactly one specific character.
struct TokenClass {
  TokenKind kind = TokenKind::Digits;
  char ch = 0;  // only meaningful for Punct

  static TokenClass punct(char c) { return TokenClass{TokenKind::Punct, c}; }

  bool matches(char c) const;
  std::string to_string() const;

  friend bool operator==(const TokenClass&, const TokenClass&) = default;
  friend auto operator<=>(const TokenClass&, const TokenClass&) = default;
};

/// Selects the `occurrence`-th match of a token sequence. A match is a run of
/// adjacent substrings, one per token, each of which is a maximal run of its
/// class. Negative occurrences count from the end (-1 is the last match).
struct ExtractSpec {
  std::vector<TokenClass> tokens;
  int occurrence = 1;

  std::string to_string() const;

  friend bool operator==(const ExtractSpec&, const ExtractSpec&) = default;
  friend auto operator<=>(const ExtractSpec&, const ExtractSpec&) = default;
};

/// Maximal runs of every token class over one string, indexed by start
/// position. Reused across many extraction attempts on the same string.
class TokenizedString {
 public:
  TokenizedString(std::string_view text, std::span<const TokenClass> alphabet);

  std::string_view text() const { return text_; }
  /// All [begin, end) spans matching `tokens`, ordered by begin.
  std::vector<std::pair<std::size_t, std::size_t>> matches(std::span<const TokenClass> tokens) const;
  std::optional<std::string_view> extract(const ExtractSpec& spec) const;

 private:
  // End of the maximal run of class `alphabet_[k]` starting at position p, or
  // -1 when no maximal run starts there.
  int run_end(std::size_t class_index, std::size_t p) const;
  std::size_t class_index(const TokenClass& token) const;

  std::string text_;
  std::vector<TokenClass> alphabet_;
  std::vector<std::vector<int>> run_end_;
};

/// Default class order used by the solvers: Digits, Alnum, Alpha, Lower,
/// Upper, Whitespace, then Punct for every other character seen in `texts`.
std::vector<TokenClass> token_alphabet(std::span<const std::string> texts);

std::vector<std::pair<std::size_t, std::size_t>> token_matches(std::string_view text,
                                                               std::span<const TokenClass> tokens);
std::optional<std::string> extract(std::string_view text, const ExtractSpec& spec);

// ---------------------------------------------------------------------------
// String programs

struct ExtractSegment {
  int input = 0;
  ExtractSpec spec;

  friend bool operator==(const ExtractSegment&, const ExtractSegment&) = default;
};

struct LiteralSegment {
  std::string text;

  friend bool operator==(const LiteralSegment&, const LiteralSegment&) = default;
};

using ConcatSegment = std::variant<ExtractSegment, LiteralSegment>;

struct ConcatProgram {
  std::vector<ConcatSegment> segments;

  /// Largest referenced input position plus one.
  int min_arity() const;

  friend bool operator==(const ConcatProgram&, const ConcatProgram&) = default;
};

// ---------------------------------------------------------------------------
// Features

enum class FeatureFamily { Linear, Div, Mod, Sum, Substring, Concat };

std::string_view to_string(FeatureFamily family);

struct LinearFeature {
  std::int64_t a = 1;
  std::int64_t b = 0;
  friend bool operator==(const LinearFeature&, const LinearFeature&) = default;
};
struct DivFeature {
  std::int64_t b = 0;
  std::int64_t d = 2;
  friend bool operator==(const DivFeature&, const DivFeature&) = default;
};
struct ModFeature {
  std::int64_t b1 = 0;
  std::int64_t b2 = 0;
  std::int64_t d = 2;
  friend bool operator==(const ModFeature&, const ModFeature&) = default;
};
struct SumFeature {
  std::int64_t b = 0;
  friend bool operator==(const SumFeature&, const SumFeature&) = default;
};
struct SubstringFeature {
  ExtractSpec spec;
  friend bool operator==(const SubstringFeature&, const SubstringFeature&) = default;
};
struct ConcatFeature {
  ConcatProgram program;
  friend bool operator==(const ConcatFeature&, const ConcatFeature&) = default;
};

/// A concrete feature with all parameters solved. Alternatives are in
/// FeatureFamily order.
class FeatureInstance {
 public:
  using Params = std::variant<LinearFeature, DivFeature, ModFeature, SumFeature,
                              SubstringFeature, ConcatFeature>;

  FeatureInstance(Params params);  // NOLINT(google-explicit-constructor)

  FeatureFamily family() const { return static_cast<FeatureFamily>(params_.index()); }
  const Params& params() const { return params_; }

  template <typename T>
  const T& as() const {
    return std::get<T>(params_);
  }

  /// Output type for the given input types, or nullopt if they do not fit.
  std::optional<ColumnType> result_type(std::span<const ColumnType> inputs) const;

  friend bool operator==(const FeatureInstance&, const FeatureInstance&) = default;

 private:
  Params params_;
};

/// Evaluates the feature on one row. Throws TypeMismatch for ill-typed
/// arguments, ExtractionMiss when a substring/concat finds no match, and
/// OverflowError on 64-bit overflow.
Value apply_feature(const FeatureInstance& feature, std::span<const Value> args);

/// Like apply_feature, but a miss or an overflow yields nullopt.
std::optional<Value> try_apply_feature(const FeatureInstance& feature, std::span<const Value> args);

/// Families whose signature accepts `inputs` and produces `output`, in the
/// order Linear, Div, Mod, Sum, Substring, Concat.
std::vector<FeatureFamily> enumerate_feature_families(std::span<const ColumnType> inputs,
                                                      ColumnType output);

/// `linear(-5,-25)`, `mod(0,0,2)`, `substring{Alnum#1}`,
/// `concat[x0{Alnum#1} "-" x1{Digits#1}]`.
std::string format_feature(const FeatureInstance& feature);
FeatureInstance parse_feature(std::string_view text);

}  // namespace bee
