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

#include "bee/feature_solvers.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "bee/error.hpp"

namespace bee {

namespace {

bool replays(const FeatureInstance& f, std::span<const IntPair> pairs) {
  for (const auto& [x, y] : pairs) {
    Value arg(x);
    auto out = try_apply_feature(f, std::span<const Value>(&arg, 1));
    if (!out || out->as_int() != y) return false;
  }
  return true;
}

// Rank of an occurrence: 1, 2, ..., k, then -1, -2, ..., -k.
int occurrence_rank(int occurrence, int max_occurrence) {
  return occurrence > 0 ? occurrence - 1 : max_occurrence - occurrence - 1;
}

struct RankedSpec {
  std::vector<std::size_t> classes;  // indices into the alphabet
  int occurrence = 1;
  int max_occurrence = 3;

  auto key() const {
    return std::make_tuple(classes.size(), occurrence_rank(occurrence, max_occurrence), classes);
  }
  friend bool operator<(const RankedSpec& a, const RankedSpec& b) { return a.key() < b.key(); }
  friend bool operator==(const RankedSpec& a, const RankedSpec& b) { return a.key() == b.key(); }
};

ExtractSpec to_spec(const RankedSpec& r, std::span<const TokenClass> alphabet) {
  ExtractSpec spec;
  for (auto k : r.classes) spec.tokens.push_back(alphabet[k]);
  spec.occurrence = r.occurrence;
  return spec;
}

// Every token sequence (up to max_tokens classes) whose match starts at
// `begin`, reported with its end position.
void sequences_from(const TokenizedString& ts, std::span<const TokenClass> alphabet,
                    std::size_t begin, int max_tokens,
                    const std::function<void(const std::vector<std::size_t>&, std::size_t)>& emit) {
  std::vector<std::size_t> seq;
  std::function<void(std::size_t)> dfs = [&](std::size_t pos) {
    if (!seq.empty()) emit(seq, pos);
    if (static_cast<int>(seq.size()) == max_tokens) return;
    for (std::size_t k = 0; k < alphabet.size(); ++k) {
      auto m = ts.matches(std::span<const TokenClass>(&alphabet[k], 1));
      // Runs of class k that start exactly at pos.
      for (const auto& [b, e] : m) {
        if (b == pos) {
          seq.push_back(k);
          dfs(e);
          seq.pop_back();
          break;
        }
        if (b > pos) break;
      }
    }
  };
  dfs(begin);
}

// Specs that extract exactly [begin, end) from the tokenized string.
void specs_for_span(const TokenizedString& ts, std::span<const TokenClass> alphabet,
                    std::size_t begin, std::size_t end, const SolverLimits& limits,
                    std::vector<RankedSpec>& out) {
  sequences_from(ts, alphabet, begin, limits.max_tokens,
                 [&](const std::vector<std::size_t>& seq, std::size_t e) {
                   if (e != end) return;
                   std::vector<TokenClass> tokens;
                   for (auto k : seq) tokens.push_back(alphabet[k]);
                   auto found = ts.matches(tokens);
                   for (std::size_t i = 0; i < found.size(); ++i) {
                     if (found[i].first != begin) continue;
                     int pos = static_cast<int>(i) + 1;
                     int neg = static_cast<int>(i) - static_cast<int>(found.size());
                     if (pos <= limits.max_occurrence) out.push_back({seq, pos, limits.max_occurrence});
                     if (-neg <= limits.max_occurrence) out.push_back({seq, neg, limits.max_occurrence});
                   }
                 });
}

}  // namespace

std::optional<FeatureInstance> solve_linear(std::span<const IntPair> pairs) {
  if (pairs.size() < 2) return std::nullopt;
  const IntPair& p1 = pairs[0];
  const IntPair* p2 = nullptr;
  for (const auto& p : pairs) {
    if (p.first != p1.first) {
      p2 = &p;
      break;
    }
  }
  if (p2 == nullptr) return std::nullopt;
  try {
    std::int64_t dx = arith::sub(p2->first, p1.first);
    std::int64_t dy = arith::sub(p2->second, p1.second);
    if (dy % dx != 0) return std::nullopt;
    std::int64_t a = dy / dx;
    std::int64_t b = arith::sub(p1.second, arith::mul(a, p1.first));
    FeatureInstance f(LinearFeature{a, b});
    if (replays(f, pairs)) return f;
  } catch (const OverflowError&) {
  }
  return std::nullopt;
}

std::optional<FeatureInstance> solve_sum(std::span<const IntTriple> triples) {
  if (triples.empty()) return std::nullopt;
  try {
    const auto& t = triples[0];
    std::int64_t b = arith::sub(arith::sub(t[2], t[0]), t[1]);
    FeatureInstance f(SumFeature{b});
    for (const auto& [x, y, out] : triples) {
      std::array<Value, 2> args{Value(x), Value(y)};
      auto got = try_apply_feature(f, args);
      if (!got || got->as_int() != out) return std::nullopt;
    }
    return f;
  } catch (const OverflowError&) {
    return std::nullopt;
  }
}

std::optional<FeatureInstance> solve_div(std::span<const IntPair> pairs, const SolverLimits& limits) {
  if (pairs.size() < 2) return std::nullopt;
  for (std::int64_t d = 2; d <= limits.div_max_divisor; ++d) {
    try {
      // floor((x + b) / d) = y  <=>  b in [d*y - x, d*y - x + d - 1]
      std::int64_t lo = std::numeric_limits<std::int64_t>::min();
      std::int64_t hi = std::numeric_limits<std::int64_t>::max();
      for (const auto& [x, y] : pairs) {
        std::int64_t base = arith::sub(arith::mul(d, y), x);
        lo = std::max(lo, base);
        hi = std::min(hi, arith::add(base, d - 1));
        if (lo > hi) break;
      }
      if (lo > hi) continue;
      FeatureInstance f(DivFeature{lo, d});
      if (replays(f, pairs)) return f;
    } catch (const OverflowError&) {
    }
  }
  return std::nullopt;
}

std::optional<FeatureInstance> solve_mod(std::span<const IntPair> pairs) {
  if (pairs.size() < 2) return std::nullopt;
  const auto& [x1, y1] = pairs[0];
  for (std::int64_t d = 2; d <= 10; ++d) {
    for (std::int64_t b1 = 0; b1 < d; ++b1) {
      try {
        std::int64_t b2 = arith::sub(y1, arith::floor_mod(arith::add(x1, b1), d));
        FeatureInstance f(ModFeature{b1, b2, d});
        if (replays(f, pairs)) return f;
      } catch (const OverflowError&) {
      }
    }
  }
  return std::nullopt;
}

std::vector<ExtractSpec> ranked_extract_specs(std::span<const TokenClass> alphabet,
                                              const SolverLimits& limits) {
  std::vector<ExtractSpec> out;
  std::vector<std::size_t> seq;
  for (int len = 1; len <= limits.max_tokens; ++len) {
    std::vector<std::vector<std::size_t>> seqs;
    std::function<void()> gen = [&]() {
      if (static_cast<int>(seq.size()) == len) {
        seqs.push_back(seq);
        return;
      }
      for (std::size_t k = 0; k < alphabet.size(); ++k) {
        seq.push_back(k);
        gen();
        seq.pop_back();
      }
    };
    gen();
    std::vector<int> occs;
    for (int o = 1; o <= limits.max_occurrence; ++o) occs.push_back(o);
    for (int o = 1; o <= limits.max_occurrence; ++o) occs.push_back(-o);
    for (int occ : occs) {
      for (const auto& s : seqs) out.push_back(to_spec(RankedSpec{s, occ, limits.max_occurrence}, alphabet));
    }
  }
  return out;
}

std::optional<FeatureInstance> solve_substring(std::span<const StrPair> pairs,
                                               const SolverLimits& limits) {
  if (pairs.empty()) return std::nullopt;
  for (const auto& [x, y] : pairs) {
    if (y.empty() || x.find(y) == std::string::npos) return std::nullopt;
  }
  std::vector<std::string> texts;
  for (const auto& p : pairs) texts.push_back(p.first);
  auto alphabet = token_alphabet(texts);

  // Candidates are the specs that reproduce the first pair.
  const auto& [x1, y1] = pairs[0];
  TokenizedString ts1(x1, alphabet);
  std::vector<RankedSpec> candidates;
  for (std::size_t b = x1.find(y1); b != std::string::npos; b = x1.find(y1, b + 1)) {
    specs_for_span(ts1, alphabet, b, b + y1.size(), limits, candidates);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<TokenizedString> rest;
  for (std::size_t i = 1; i < pairs.size(); ++i) rest.emplace_back(pairs[i].first, alphabet);
  for (const auto& c : candidates) {
    ExtractSpec spec = to_spec(c, alphabet);
    bool ok = true;
    for (std::size_t i = 1; i < pairs.size() && ok; ++i) {
      auto got = rest[i - 1].extract(spec);
      ok = got && *got == pairs[i].second;
    }
    if (ok) return FeatureInstance(SubstringFeature{std::move(spec)});
  }
  return std::nullopt;
}

std::optional<FeatureInstance> solve_concat(std::span<const ConcatExample> examples,
                                            const SolverLimits& limits) {
  if (examples.empty()) return std::nullopt;
  const std::size_t arity = examples[0].inputs.size();
  if (arity == 0) return std::nullopt;
  for (const auto& ex : examples) {
    if (ex.inputs.size() != arity || ex.output.empty()) return std::nullopt;
  }
  const std::size_t rows = examples.size();

  std::vector<std::string> texts;
  for (const auto& ex : examples) texts.insert(texts.end(), ex.inputs.begin(), ex.inputs.end());
  auto alphabet = token_alphabet(texts);

  // tokenized[r][p]: input p of example r.
  std::vector<std::vector<TokenizedString>> tokenized(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (const auto& in : examples[r].inputs) tokenized[r].emplace_back(in, alphabet);
  }

  // Extract candidates: specs whose value on the first example occurs in its
  // output and which succeed on every example. Deduplicated by the vector of
  // values they produce, keeping the best-ranked spec.
  struct Candidate {
    int input;
    ExtractSpec spec;
    std::vector<std::string> values;
  };
  std::vector<Candidate> extracts;
  {
    std::vector<std::pair<std::pair<int, RankedSpec>, std::vector<std::string>>> raw;
    const std::string& out0 = examples[0].output;
    for (std::size_t p = 0; p < arity; ++p) {
      const auto& ts = tokenized[0][p];
      std::vector<RankedSpec> specs;
      for (std::size_t b = 0; b < ts.text().size(); ++b) {
        sequences_from(ts, alphabet, b, limits.max_tokens,
                       [&](const std::vector<std::size_t>& seq, std::size_t e) {
                         if (out0.find(ts.text().substr(b, e - b)) == std::string::npos) return;
                         specs_for_span(ts, alphabet, b, e, limits, specs);
                         (void)seq;
                       });
      }
      std::sort(specs.begin(), specs.end());
      specs.erase(std::unique(specs.begin(), specs.end()), specs.end());
      for (const auto& rs : specs) {
        ExtractSpec spec = to_spec(rs, alphabet);
        std::vector<std::string> values;
        bool ok = true;
        for (std::size_t r = 0; r < rows && ok; ++r) {
          auto v = tokenized[r][p].extract(spec);
          ok = v.has_value() && examples[r].output.find(*v) != std::string::npos;
          if (ok) values.emplace_back(*v);
        }
        if (ok) raw.push_back({{static_cast<int>(p), rs}, std::move(values)});
      }
    }
    std::stable_sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
      return std::tie(a.first.second, a.first.first) < std::tie(b.first.second, b.first.first);
    });
    std::set<std::vector<std::string>> seen;
    for (auto& [key, values] : raw) {
      if (!seen.insert(values).second) continue;
      extracts.push_back({key.first, to_spec(key.second, alphabet), std::move(values)});
    }
  }

  // Shortest path over per-example cut positions. Cost is (literal
  // characters, segments); segments are capped.
  using Offsets = std::vector<std::size_t>;
  struct Node {
    std::size_t lit_chars;
    std::size_t segments;
    std::size_t seq;
    Offsets offsets;
  };
  auto worse = [](const Node& a, const Node& b) {
    return std::tie(a.lit_chars, a.segments, a.seq) > std::tie(b.lit_chars, b.segments, b.seq);
  };
  std::priority_queue<Node, std::vector<Node>, decltype(worse)> queue(worse);
  // Settled states keyed by (offsets, segments).
  std::map<std::pair<Offsets, std::size_t>, std::pair<std::pair<Offsets, std::size_t>, ConcatSegment>> parent;
  std::set<std::pair<Offsets, std::size_t>> settled;
  std::map<std::pair<Offsets, std::size_t>, std::size_t> best_cost;

  std::size_t counter = 0;
  Offsets start(rows, 0);
  queue.push(Node{0, 0, counter++, start});
  best_cost[{start, 0}] = 0;

  auto is_goal = [&](const Offsets& o) {
    for (std::size_t r = 0; r < rows; ++r) {
      if (o[r] != examples[r].output.size()) return false;
    }
    return true;
  };

  std::optional<std::pair<Offsets, std::size_t>> goal;
  while (!queue.empty()) {
    Node node = queue.top();
    queue.pop();
    auto key = std::make_pair(node.offsets, node.segments);
    if (!settled.insert(key).second) continue;
    if (is_goal(node.offsets)) {
      // Must contain at least one extract.
      if (node.lit_chars < [&] {
            std::size_t total = 0;
            for (const auto& ex : examples) total += ex.output.size();
            return total;
          }()) {
        goal = key;
        break;
      }
      continue;
    }
    if (static_cast<int>(node.segments) >= limits.concat_max_segments) continue;

    auto relax = [&](Offsets next, std::size_t lit, ConcatSegment seg) {
      auto nkey = std::make_pair(next, node.segments + 1);
      if (settled.count(nkey)) return;
      std::size_t cost = node.lit_chars + lit;
      auto it = best_cost.find(nkey);
      if (it != best_cost.end() && it->second <= cost) return;
      best_cost[nkey] = cost;
      parent.insert_or_assign(nkey, std::make_pair(key, std::move(seg)));
      queue.push(Node{cost, node.segments + 1, counter++, std::move(next)});
    };

    for (const auto& c : extracts) {
      Offsets next = node.offsets;
      bool ok = true;
      for (std::size_t r = 0; r < rows && ok; ++r) {
        const auto& out = examples[r].output;
        const auto& v = c.values[r];
        ok = out.compare(next[r], v.size(), v) == 0 && next[r] + v.size() <= out.size();
        next[r] += v.size();
      }
      if (ok) relax(std::move(next), 0, ExtractSegment{c.input, c.spec});
    }
    // Literals: any nonempty prefix shared by every example's remainder.
    std::size_t lcp = examples[0].output.size() - node.offsets[0];
    for (std::size_t r = 1; r < rows; ++r) {
      const auto& a = examples[0].output;
      const auto& b = examples[r].output;
      std::size_t n = 0;
      while (n < lcp && node.offsets[r] + n < b.size() && a[node.offsets[0] + n] == b[node.offsets[r] + n]) ++n;
      lcp = n;
    }
    for (std::size_t len = 1; len <= lcp; ++len) {
      Offsets next = node.offsets;
      for (auto& o : next) o += len;
      relax(std::move(next), len * rows,
            LiteralSegment{examples[0].output.substr(node.offsets[0], len)});
    }
  }
  if (!goal) return std::nullopt;

  ConcatProgram program;
  auto cur = *goal;
  while (cur.second > 0) {
    const auto& [prev, seg] = parent.at(cur);
    program.segments.push_back(seg);
    cur = prev;
  }
  std::reverse(program.segments.begin(), program.segments.end());
  FeatureInstance f(ConcatFeature{std::move(program)});
  for (const auto& ex : examples) {
    std::vector<Value> args(ex.inputs.begin(), ex.inputs.end());
    auto got = try_apply_feature(f, args);
    if (!got || got->as_str() != ex.output) {
      throw InternalError("concat solver produced a program that does not replay");
    }
  }
  return f;
}

std::optional<FeatureInstance> solve_feature(FeatureFamily family,
                                             std::span<const FeatureExample> examples,
                                             const SolverLimits& limits) {
  if (examples.empty()) return std::nullopt;
  // Collapse duplicates; the same inputs must not demand different outputs.
  std::vector<FeatureExample> unique;
  {
    std::map<std::vector<Value>, Value> seen;
    for (const auto& ex : examples) {
      auto [it, inserted] = seen.emplace(ex.inputs, ex.output);
      if (!inserted) {
        if (it->second != ex.output) return std::nullopt;
        continue;
      }
      unique.push_back(ex);
    }
  }
  auto int_pairs = [&]() {
    std::vector<IntPair> out;
    for (const auto& ex : unique) {
      if (ex.inputs.size() != 1 || !ex.inputs[0].is_int() || !ex.output.is_int()) return std::optional<std::vector<IntPair>>{};
      out.emplace_back(ex.inputs[0].as_int(), ex.output.as_int());
    }
    return std::optional<std::vector<IntPair>>{std::move(out)};
  };
  switch (family) {
    case FeatureFamily::Linear:
      if (auto p = int_pairs()) return solve_linear(*p);
      return std::nullopt;
    case FeatureFamily::Div:
      if (auto p = int_pairs()) return solve_div(*p, limits);
      return std::nullopt;
    case FeatureFamily::Mod:
      if (auto p = int_pairs()) return solve_mod(*p);
      return std::nullopt;
    case FeatureFamily::Sum: {
      std::vector<IntTriple> triples;
      for (const auto& ex : unique) {
        if (ex.inputs.size() != 2 || !ex.inputs[0].is_int() || !ex.inputs[1].is_int() ||
            !ex.output.is_int()) {
          return std::nullopt;
        }
        triples.push_back({ex.inputs[0].as_int(), ex.inputs[1].as_int(), ex.output.as_int()});
      }
      return solve_sum(triples);
    }
    case FeatureFamily::Substring: {
      std::vector<StrPair> pairs;
      for (const auto& ex : unique) {
        if (ex.inputs.size() != 1 || !ex.inputs[0].is_str() || !ex.output.is_str()) return std::nullopt;
        pairs.emplace_back(ex.inputs[0].as_str(), ex.output.as_str());
      }
      return solve_substring(pairs, limits);
    }
    case FeatureFamily::Concat: {
      std::vector<ConcatExample> rows;
      for (const auto& ex : unique) {
        ConcatExample row;
        for (const auto& v : ex.inputs) {
          if (!v.is_str()) return std::nullopt;
          row.inputs.push_back(v.as_str());
        }
        if (!ex.output.is_str()) return std::nullopt;
        row.output = ex.output.as_str();
        rows.push_back(std::move(row));
      }
      return solve_concat(rows, limits);
    }
  }
  return std::nullopt;
}

}  // namespace bee
