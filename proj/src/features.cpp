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

#include "bee/features.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "bee/error.hpp"
#include "feature_parse.hpp"

namespace bee {

// ---------------------------------------------------------------------------
// Token classes

bool TokenClass::matches(char c) const {
  auto u = static_cast<unsigned char>(c);
  switch (kind) {
    case TokenKind::Digits:
      return u < 128 && std::isdigit(u);
    case TokenKind::Alnum:
      return u < 128 && std::isalnum(u);
    case TokenKind::Alpha:
      return u < 128 && std::isalpha(u);
    case TokenKind::Lower:
      return u < 128 && std::islower(u);
    case TokenKind::Upper:
      return u < 128 && std::isupper(u);
    case TokenKind::Whitespace:
      return c == ' ' || c == '\t';
    case TokenKind::Punct:
      return c == ch;
  }
  return false;
}

std::string TokenClass::to_string() const {
  switch (kind) {
    case TokenKind::Digits:
      return "Digits";
    case TokenKind::Alnum:
      return "Alnum";
    case TokenKind::Alpha:
      return "Alpha";
    case TokenKind::Lower:
      return "Lower";
    case TokenKind::Upper:
      return "Upper";
    case TokenKind::Whitespace:
      return "Whitespace";
    case TokenKind::Punct:
      break;
  }
  std::string out = "'";
  if (ch == '\'' || ch == '\\') out += '\\';
  out += ch;
  out += '\'';
  return out;
}

std::string ExtractSpec::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i].to_string();
  }
  out += '#';
  out += std::to_string(occurrence);
  out += '}';
  return out;
}

std::vector<TokenClass> token_alphabet(std::span<const std::string> texts) {
  std::vector<TokenClass> out = {
      {TokenKind::Digits, 0}, {TokenKind::Alnum, 0}, {TokenKind::Alpha, 0},
      {TokenKind::Lower, 0},  {TokenKind::Upper, 0}, {TokenKind::Whitespace, 0},
  };
  std::set<char> puncts;
  for (const auto& t : texts) {
    for (char c : t) {
      auto u = static_cast<unsigned char>(c);
      bool classified = (u < 128 && std::isalnum(u)) || c == ' ' || c == '\t';
      if (!classified) puncts.insert(c);
    }
  }
  for (char c : puncts) out.push_back(TokenClass::punct(c));
  return out;
}

TokenizedString::TokenizedString(std::string_view text, std::span<const TokenClass> alphabet)
    : text_(text), alphabet_(alphabet.begin(), alphabet.end()) {
  const std::size_t n = text_.size();
  run_end_.assign(alphabet_.size(), std::vector<int>(n, -1));
  for (std::size_t k = 0; k < alphabet_.size(); ++k) {
    const auto& cls = alphabet_[k];
    std::size_t p = 0;
    while (p < n) {
      if (!cls.matches(text_[p])) {
        ++p;
        continue;
      }
      std::size_t q = p;
      while (q < n && cls.matches(text_[q])) ++q;
      run_end_[k][p] = static_cast<int>(q);
      p = q;
    }
  }
}

std::size_t TokenizedString::class_index(const TokenClass& token) const {
  for (std::size_t k = 0; k < alphabet_.size(); ++k) {
    if (alphabet_[k] == token) return k;
  }
  return alphabet_.size();
}

int TokenizedString::run_end(std::size_t class_index, std::size_t p) const {
  if (class_index >= alphabet_.size() || p >= text_.size()) return -1;
  return run_end_[class_index][p];
}

std::vector<std::pair<std::size_t, std::size_t>> TokenizedString::matches(
    std::span<const TokenClass> tokens) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (tokens.empty()) return out;
  std::vector<std::size_t> idx;
  idx.reserve(tokens.size());
  for (const auto& t : tokens) {
    std::size_t k = class_index(t);
    if (k == alphabet_.size()) {
      // Class outside the precomputed alphabet: fall back to a direct scan.
      return token_matches(text_, tokens);
    }
    idx.push_back(k);
  }
  for (std::size_t start = 0; start < text_.size(); ++start) {
    std::size_t p = start;
    bool ok = true;
    for (auto k : idx) {
      int e = run_end(k, p);
      if (e < 0) {
        ok = false;
        break;
      }
      p = static_cast<std::size_t>(e);
    }
    if (ok) out.emplace_back(start, p);
  }
  return out;
}

std::optional<std::string_view> TokenizedString::extract(const ExtractSpec& spec) const {
  if (spec.occurrence == 0 || spec.tokens.empty()) return std::nullopt;
  auto found = matches(spec.tokens);
  auto count = static_cast<long>(found.size());
  long k = spec.occurrence > 0 ? spec.occurrence - 1 : count + spec.occurrence;
  if (k < 0 || k >= count) return std::nullopt;
  auto [b, e] = found[static_cast<std::size_t>(k)];
  return std::string_view(text_).substr(b, e - b);
}

std::vector<std::pair<std::size_t, std::size_t>> token_matches(std::string_view text,
                                                               std::span<const TokenClass> tokens) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (tokens.empty()) return out;
  auto maximal_run_end = [&](const TokenClass& cls, std::size_t p) -> long {
    if (p >= text.size() || !cls.matches(text[p])) return -1;
    if (p > 0 && cls.matches(text[p - 1])) return -1;
    std::size_t q = p;
    while (q < text.size() && cls.matches(text[q])) ++q;
    return static_cast<long>(q);
  };
  for (std::size_t start = 0; start < text.size(); ++start) {
    std::size_t p = start;
    bool ok = true;
    for (const auto& t : tokens) {
      long e = maximal_run_end(t, p);
      if (e < 0) {
        ok = false;
        break;
      }
      p = static_cast<std::size_t>(e);
    }
    if (ok) out.emplace_back(start, p);
  }
  return out;
}

std::optional<std::string> extract(std::string_view text, const ExtractSpec& spec) {
  if (spec.occurrence == 0 || spec.tokens.empty()) return std::nullopt;
  auto found = token_matches(text, spec.tokens);
  auto count = static_cast<long>(found.size());
  long k = spec.occurrence > 0 ? spec.occurrence - 1 : count + spec.occurrence;
  if (k < 0 || k >= count) return std::nullopt;
  auto [b, e] = found[static_cast<std::size_t>(k)];
  return std::string(text.substr(b, e - b));
}

int ConcatProgram::min_arity() const {
  int n = 0;
  for (const auto& seg : segments) {
    if (const auto* ex = std::get_if<ExtractSegment>(&seg)) n = std::max(n, ex->input + 1);
  }
  return n;
}

// ---------------------------------------------------------------------------
// Features

std::string_view to_string(FeatureFamily family) {
  switch (family) {
    case FeatureFamily::Linear:
      return "linear";
    case FeatureFamily::Div:
      return "div";
    case FeatureFamily::Mod:
      return "mod";
    case FeatureFamily::Sum:
      return "sum";
    case FeatureFamily::Substring:
      return "substring";
    case FeatureFamily::Concat:
      return "concat";
  }
  return "?";
}

FeatureInstance::FeatureInstance(Params params) : params_(std::move(params)) {
  if (const auto* d = std::get_if<DivFeature>(&params_); d && d->d < 2) {
    throw TypeMismatch("div divisor must be at least 2");
  }
  if (const auto* m = std::get_if<ModFeature>(&params_)) {
    if (m->d < 2 || m->d > 10) throw TypeMismatch("mod divisor must lie in [2, 10]");
    if (m->b1 < 0 || m->b1 >= m->d) throw TypeMismatch("mod offset b1 must lie in [0, d)");
  }
  if (const auto* s = std::get_if<SubstringFeature>(&params_)) {
    if (s->spec.tokens.empty() || s->spec.occurrence == 0) {
      throw TypeMismatch("substring needs at least one token and a nonzero occurrence");
    }
  }
  if (const auto* c = std::get_if<ConcatFeature>(&params_)) {
    if (c->program.segments.empty()) throw TypeMismatch("concat needs at least one segment");
    for (const auto& seg : c->program.segments) {
      if (const auto* ex = std::get_if<ExtractSegment>(&seg)) {
        if (ex->input < 0 || ex->spec.tokens.empty() || ex->spec.occurrence == 0) {
          throw TypeMismatch("malformed concat extract segment");
        }
      } else if (std::get<LiteralSegment>(seg).text.empty()) {
        throw TypeMismatch("concat literal segments must be nonempty");
      }
    }
  }
}

std::optional<ColumnType> FeatureInstance::result_type(std::span<const ColumnType> inputs) const {
  auto all = [&](ColumnType t) {
    return std::all_of(inputs.begin(), inputs.end(), [t](ColumnType x) { return x == t; });
  };
  switch (family()) {
    case FeatureFamily::Linear:
    case FeatureFamily::Div:
    case FeatureFamily::Mod:
      if (inputs.size() == 1 && inputs[0] == ColumnType::Int) return ColumnType::Int;
      return std::nullopt;
    case FeatureFamily::Sum:
      if (inputs.size() == 2 && all(ColumnType::Int)) return ColumnType::Int;
      return std::nullopt;
    case FeatureFamily::Substring:
      if (inputs.size() == 1 && inputs[0] == ColumnType::Str) return ColumnType::Str;
      return std::nullopt;
    case FeatureFamily::Concat:
      if (!inputs.empty() && all(ColumnType::Str) &&
          static_cast<int>(inputs.size()) >= as<ConcatFeature>().program.min_arity()) {
        return ColumnType::Str;
      }
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

void check_args(const FeatureInstance& f, std::span<const Value> args) {
  std::vector<ColumnType> types;
  types.reserve(args.size());
  for (const auto& a : args) types.push_back(a.type());
  if (!f.result_type(types)) {
    throw TypeMismatch("arguments do not fit feature " + format_feature(f));
  }
}

}  // namespace

Value apply_feature(const FeatureInstance& feature, std::span<const Value> args) {
  check_args(feature, args);
  struct Visitor {
    std::span<const Value> args;
    Value operator()(const LinearFeature& f) const {
      return arith::add(arith::mul(f.a, args[0].as_int()), f.b);
    }
    Value operator()(const DivFeature& f) const {
      return arith::floor_div(arith::add(args[0].as_int(), f.b), f.d);
    }
    Value operator()(const ModFeature& f) const {
      return arith::add(arith::floor_mod(arith::add(args[0].as_int(), f.b1), f.d), f.b2);
    }
    Value operator()(const SumFeature& f) const {
      return arith::add(arith::add(args[0].as_int(), args[1].as_int()), f.b);
    }
    Value operator()(const SubstringFeature& f) const {
      auto out = extract(args[0].as_str(), f.spec);
      if (!out) {
        throw ExtractionMiss("no match of " + f.spec.to_string() + " in " + args[0].to_string());
      }
      return Value(std::move(*out));
    }
    Value operator()(const ConcatFeature& f) const {
      std::string out;
      for (const auto& seg : f.program.segments) {
        if (const auto* lit = std::get_if<LiteralSegment>(&seg)) {
          out += lit->text;
          continue;
        }
        const auto& ex = std::get<ExtractSegment>(seg);
        const auto& src = args[static_cast<std::size_t>(ex.input)].as_str();
        auto piece = extract(src, ex.spec);
        if (!piece) {
          throw ExtractionMiss("no match of x" + std::to_string(ex.input) + ex.spec.to_string() +
                               " in " + quote_string(src));
        }
        out += *piece;
      }
      return Value(std::move(out));
    }
  };
  return std::visit(Visitor{args}, feature.params());
}

std::optional<Value> try_apply_feature(const FeatureInstance& feature, std::span<const Value> args) {
  try {
    return apply_feature(feature, args);
  } catch (const ExtractionMiss&) {
    return std::nullopt;
  } catch (const OverflowError&) {
    return std::nullopt;
  }
}

std::vector<FeatureFamily> enumerate_feature_families(std::span<const ColumnType> inputs,
                                                      ColumnType output) {
  std::vector<FeatureFamily> out;
  if (inputs.empty()) return out;
  auto all = [&](ColumnType t) {
    return std::all_of(inputs.begin(), inputs.end(), [t](ColumnType x) { return x == t; });
  };
  if (output == ColumnType::Int && all(ColumnType::Int)) {
    if (inputs.size() == 1) {
      out = {FeatureFamily::Linear, FeatureFamily::Div, FeatureFamily::Mod};
    } else if (inputs.size() == 2) {
      out = {FeatureFamily::Sum};
    }
  } else if (output == ColumnType::Str && all(ColumnType::Str)) {
    if (inputs.size() == 1) out.push_back(FeatureFamily::Substring);
    out.push_back(FeatureFamily::Concat);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form

std::string format_feature(const FeatureInstance& feature) {
  struct Visitor {
    std::string operator()(const LinearFeature& f) const {
      return "linear(" + std::to_string(f.a) + "," + std::to_string(f.b) + ")";
    }
    std::string operator()(const DivFeature& f) const {
      return "div(" + std::to_string(f.b) + "," + std::to_string(f.d) + ")";
    }
    std::string operator()(const ModFeature& f) const {
      return "mod(" + std::to_string(f.b1) + "," + std::to_string(f.b2) + "," +
             std::to_string(f.d) + ")";
    }
    std::string operator()(const SumFeature& f) const {
      return "sum(" + std::to_string(f.b) + ")";
    }
    std::string operator()(const SubstringFeature& f) const { return "substring" + f.spec.to_string(); }
    std::string operator()(const ConcatFeature& f) const {
      std::string out = "concat[";
      bool first = true;
      for (const auto& seg : f.program.segments) {
        if (!first) out += ' ';
        first = false;
        if (const auto* lit = std::get_if<LiteralSegment>(&seg)) {
          out += quote_string(lit->text);
        } else {
          const auto& ex = std::get<ExtractSegment>(seg);
          out += "x" + std::to_string(ex.input) + ex.spec.to_string();
        }
      }
      out += ']';
      return out;
    }
  };
  return std::visit(Visitor{}, feature.params());
}

namespace detail {

ExtractSpec parse_extract_spec(Lexer& lex) {
  ExtractSpec spec;
  lex.expect_sym('{');
  while (!lex.at_sym('#')) {
    const Token& t = lex.peek();
    if (t.kind == Tok::Char) {
      spec.tokens.push_back(TokenClass::punct(t.text[0]));
      lex.next();
      continue;
    }
    std::string name = lex.expect_ident();
    if (name == "Digits") {
      spec.tokens.push_back({TokenKind::Digits, 0});
    } else if (name == "Alnum") {
      spec.tokens.push_back({TokenKind::Alnum, 0});
    } else if (name == "Alpha") {
      spec.tokens.push_back({TokenKind::Alpha, 0});
    } else if (name == "Lower") {
      spec.tokens.push_back({TokenKind::Lower, 0});
    } else if (name == "Upper") {
      spec.tokens.push_back({TokenKind::Upper, 0});
    } else if (name == "Whitespace") {
      spec.tokens.push_back({TokenKind::Whitespace, 0});
    } else {
      lex.fail("unknown token class '" + name + "'");
    }
  }
  lex.expect_sym('#');
  spec.occurrence = static_cast<int>(lex.expect_int());
  lex.expect_sym('}');
  if (spec.tokens.empty()) lex.fail("extract spec needs at least one token class");
  if (spec.occurrence == 0) lex.fail("extract occurrence must be nonzero");
  return spec;
}

FeatureInstance parse_feature(Lexer& lex) {
  std::string name = lex.expect_ident();
  auto int_args = [&lex](std::size_t n) {
    std::vector<std::int64_t> out;
    lex.expect_sym('(');
    for (std::size_t i = 0; i < n; ++i) {
      if (i) lex.expect_sym(',');
      out.push_back(lex.expect_int());
    }
    lex.expect_sym(')');
    return out;
  };
  try {
    if (name == "linear") {
      auto a = int_args(2);
      return FeatureInstance(LinearFeature{a[0], a[1]});
    }
    if (name == "div") {
      auto a = int_args(2);
      return FeatureInstance(DivFeature{a[0], a[1]});
    }
    if (name == "mod") {
      auto a = int_args(3);
      return FeatureInstance(ModFeature{a[0], a[1], a[2]});
    }
    if (name == "sum") {
      auto a = int_args(1);
      return FeatureInstance(SumFeature{a[0]});
    }
    if (name == "substring") {
      return FeatureInstance(SubstringFeature{parse_extract_spec(lex)});
    }
    if (name == "concat") {
      ConcatProgram prog;
      lex.expect_sym('[');
      while (!lex.at_sym(']')) {
        if (lex.peek().kind == Tok::String) {
          prog.segments.emplace_back(LiteralSegment{lex.expect_string()});
          continue;
        }
        std::string x = lex.expect_ident();
        if (x.size() < 2 || x[0] != 'x' ||
            !std::all_of(x.begin() + 1, x.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
          lex.fail("expected input reference like x0, got '" + x + "'");
        }
        int input = std::stoi(x.substr(1));
        prog.segments.emplace_back(ExtractSegment{input, parse_extract_spec(lex)});
      }
      lex.expect_sym(']');
      return FeatureInstance(ConcatFeature{std::move(prog)});
    }
  } catch (const TypeMismatch& e) {
    lex.fail(e.what());
  }
  lex.fail("unknown feature '" + name + "'");
}

}  // namespace detail

FeatureInstance parse_feature(std::string_view text) {
  detail::Lexer lex(text);
  FeatureInstance f = detail::parse_feature(lex);
  if (!lex.at_end()) lex.fail("trailing input after feature");
  return f;
}

}  // namespace bee
