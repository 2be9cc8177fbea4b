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

#include "bee/matcher.hpp"

#include <algorithm>
#include <functional>

#include "bee/error.hpp"
#include "bee/interpreter.hpp"

namespace bee {

namespace {

ColumnType family_output(FeatureFamily f) {
  return f == FeatureFamily::Substring || f == FeatureFamily::Concat ? ColumnType::Str : ColumnType::Int;
}

// Drops Concat inputs the program never reads and renumbers the rest.
void prune_concat_inputs(ColumnChoice& choice) {
  if (!choice.feature || choice.feature->family() != FeatureFamily::Concat) return;
  ConcatProgram program = choice.feature->as<ConcatFeature>().program;
  std::vector<int> used;
  for (const auto& seg : program.segments) {
    if (const auto* ex = std::get_if<ExtractSegment>(&seg)) {
      if (std::find(used.begin(), used.end(), ex->input) == used.end()) used.push_back(ex->input);
    }
  }
  std::sort(used.begin(), used.end());
  std::vector<std::size_t> inputs;
  for (int u : used) inputs.push_back(choice.feature_inputs[static_cast<std::size_t>(u)]);
  for (auto& seg : program.segments) {
    if (auto* ex = std::get_if<ExtractSegment>(&seg)) {
      ex->input = static_cast<int>(std::find(used.begin(), used.end(), ex->input) - used.begin());
    }
  }
  choice.feature = FeatureInstance(ConcatFeature{std::move(program)});
  choice.feature_inputs = std::move(inputs);
}

// Assigns every hypothesis row a distinct base row (Kuhn's algorithm). Returns
// false when no surjection exists.
bool saturate_hypothesis_rows(const std::vector<RowSet>& cands, std::size_t h_rows,
                              std::vector<std::size_t>& row_map) {
  const std::size_t m = cands.size();
  std::vector<std::vector<std::size_t>> by_h(h_rows);
  for (std::size_t i = 0; i < m; ++i) {
    for (auto r : cands[i].indices()) by_h[r].push_back(i);
  }
  std::vector<std::ptrdiff_t> owner(m, -1);  // base row -> hypothesis row
  std::vector<bool> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t r) {
    for (auto i : by_h[r]) {
      if (visited[i]) continue;
      visited[i] = true;
      if (owner[i] < 0 || augment(static_cast<std::size_t>(owner[i]))) {
        owner[i] = static_cast<std::ptrdiff_t>(r);
        return true;
      }
    }
    return false;
  };
  for (std::size_t r = 0; r < h_rows; ++r) {
    visited.assign(m, false);
    if (!augment(r)) return false;
  }
  row_map.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    row_map[i] = owner[i] >= 0 ? static_cast<std::size_t>(owner[i]) : cands[i].indices().front();
  }
  return true;
}

struct Option {
  ColumnChoice::Kind kind;
  std::size_t base_column = 0;
};

class Matcher {
 public:
  Matcher(const Table& h, const ForwardEntry& base, const ActionSignature& action, SolverCache& cache,
          const MatchOptions& options)
      : h_(h), t_(base.table), entry_(base), action_(action), cache_(cache), options_(options) {}

  std::optional<MatchResult> run() {
    const std::size_t m = t_.row_count();
    const std::size_t mh = h_.row_count();
    if (mh == 0 || m < mh) return std::nullopt;
    abstract_ = build_abstract_table(t_, h_);

    const std::size_t cols = h_.column_count();
    h_distinct_.resize(cols);
    by_value_.resize(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t r = 0; r < mh; ++r) {
        auto [it, inserted] = by_value_[j].try_emplace(h_.at(r, j), RowSet(mh));
        it->second.set(r);
      }
      for (const auto& [v, rs] : by_value_[j]) h_distinct_[j].push_back(v);
    }

    // Candidate sources per column.
    options_per_col_.resize(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      ColumnType type = h_.schema()[j].type;
      auto& opts = options_per_col_[j];
      bool single = h_distinct_[j].size() == 1;
      if (j == 0) {
        if (single && h_distinct_[0][0] == Value(action_.name)) opts.push_back({ColumnChoice::Kind::Constant});
      } else {
        if (single && type != ColumnType::Id) opts.push_back({ColumnChoice::Kind::Constant});
        for (std::size_t k = 0; k < t_.column_count(); ++k) {
          if (t_.schema()[k].type == type && entry_.distinct[k] == h_distinct_[j]) {
            opts.push_back({ColumnChoice::Kind::Base, k});
          }
        }
        bool symbolic = std::any_of(abstract_.symbolic.begin(), abstract_.symbolic.end(),
                                    [&](const SymbolicColumn& s) { return family_output(s.family) == type; });
        if (symbolic && type != ColumnType::Id && options_.allow_features) opts.push_back({ColumnChoice::Kind::Feature});
      }
      if (opts.empty()) return std::nullopt;
    }

    // Id columns pin rows down the most; visit them first.
    order_.push_back(0);
    for (std::size_t j = 1; j < cols; ++j) {
      if (h_.schema()[j].type == ColumnType::Id) order_.push_back(j);
    }
    for (std::size_t j = 1; j < cols; ++j) {
      if (h_.schema()[j].type != ColumnType::Id) order_.push_back(j);
    }

    choice_.assign(cols, Option{ColumnChoice::Kind::Constant});
    std::vector<RowSet> cands(m, RowSet::full(mh));
    return assign(0, cands);
  }

 private:
  std::optional<MatchResult> assign(std::size_t pos, const std::vector<RowSet>& cands) {
    if (options_.deadline) options_.deadline->check();
    if (pos == order_.size()) return solve_rows(cands);
    std::size_t j = order_[pos];
    for (const auto& opt : options_per_col_[j]) {
      choice_[j] = opt;
      if (opt.kind != ColumnChoice::Kind::Base) {
        if (auto r = assign(pos + 1, cands)) return r;
        continue;
      }
      std::vector<RowSet> refined = cands;
      RowSet hit(h_.row_count());
      bool ok = true;
      for (std::size_t i = 0; i < refined.size() && ok; ++i) {
        const RowSet& same = by_value_[j].at(t_.at(i, opt.base_column));
        refined[i] = refined[i] & same;
        ok = !refined[i].none();
        if (ok) hit = hit | refined[i];
      }
      if (!ok || !hit.all()) continue;
      if (auto r = assign(pos + 1, refined)) return r;
    }
    return std::nullopt;
  }

  std::optional<MatchResult> solve_rows(const std::vector<RowSet>& cands) {
    std::vector<std::size_t> feature_cols;
    for (std::size_t j = 0; j < choice_.size(); ++j) {
      if (choice_[j].kind == ColumnChoice::Kind::Feature) feature_cols.push_back(j);
    }
    if (feature_cols.empty()) {
      std::vector<std::size_t> row_map;
      if (!saturate_hypothesis_rows(cands, h_.row_count(), row_map)) return std::nullopt;
      return finish(row_map, {});
    }

    // Enumerate surjective row maps, up to the cap.
    const std::size_t m = cands.size();
    const std::size_t mh = h_.row_count();
    std::vector<std::vector<std::size_t>> choices(m);
    for (std::size_t i = 0; i < m; ++i) choices[i] = cands[i].indices();
    std::vector<std::size_t> row_map(m, 0);
    std::vector<std::size_t> hits(mh, 0);
    std::size_t uncovered = mh;
    int tried = 0;
    std::optional<MatchResult> found;

    std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
      if (uncovered > m - i) return false;
      if (i == m) {
        ++tried;
        if (options_.deadline && tried % 16 == 0) options_.deadline->check();
        found = solve_features(row_map, feature_cols);
        return found.has_value() || tried >= options_.row_map_cap;
      }
      for (auto r : choices[i]) {
        row_map[i] = r;
        if (hits[r]++ == 0) --uncovered;
        bool stop = dfs(i + 1);
        if (--hits[r] == 0) ++uncovered;
        if (stop) return true;
      }
      return false;
    };
    dfs(0);
    return found;
  }

  std::optional<MatchResult> solve_features(const std::vector<std::size_t>& row_map,
                                            const std::vector<std::size_t>& feature_cols) {
    std::vector<ColumnChoice> solved(feature_cols.size());
    for (std::size_t f = 0; f < feature_cols.size(); ++f) {
      std::size_t j = feature_cols[f];
      ColumnType type = h_.schema()[j].type;
      bool ok = false;
      for (const auto& sym : abstract_.symbolic) {
        if (family_output(sym.family) != type) continue;
        std::vector<FeatureExample> examples;
        examples.reserve(row_map.size());
        for (std::size_t i = 0; i < row_map.size(); ++i) {
          FeatureExample ex;
          for (auto c : sym.inputs) ex.inputs.push_back(t_.at(i, c));
          ex.output = h_.at(row_map[i], j);
          examples.push_back(std::move(ex));
        }
        if (auto inst = cache_.solve(sym.family, examples, options_.limits)) {
          solved[f].kind = ColumnChoice::Kind::Feature;
          solved[f].feature = std::move(inst);
          solved[f].feature_inputs = sym.inputs;
          prune_concat_inputs(solved[f]);
          ok = true;
          break;
        }
      }
      if (!ok) return std::nullopt;
    }
    return finish(row_map, solved);
  }

  MatchResult finish(const std::vector<std::size_t>& row_map, const std::vector<ColumnChoice>& features) {
    MatchResult result;
    result.row_map = row_map;
    result.mapping.source = t_.name();
    std::size_t next_feature = 0;
    for (std::size_t j = 0; j < choice_.size(); ++j) {
      ColumnChoice c;
      c.kind = choice_[j].kind;
      switch (c.kind) {
        case ColumnChoice::Kind::Constant:
          c.constant = h_distinct_[j][0];
          result.mapping.projections.emplace_back(ConstProj{c.constant});
          break;
        case ColumnChoice::Kind::Base:
          c.base_column = choice_[j].base_column;
          result.mapping.projections.emplace_back(ColProj{t_.schema()[c.base_column].name});
          break;
        case ColumnChoice::Kind::Feature: {
          c = features[next_feature++];
          std::vector<std::string> names;
          for (auto k : c.feature_inputs) names.push_back(t_.schema()[k].name);
          result.mapping.projections.emplace_back(MutateProj{*c.feature, std::move(names)});
          break;
        }
      }
      result.columns.push_back(std::move(c));
    }
    Table produced = exec_yield(t_, result.mapping, action_);
    if (!(produced == h_)) {
      throw InternalError("match does not reproduce its hypothesis on table '" + t_.name() + "'");
    }
    return result;
  }

  const Table& h_;
  const Table& t_;
  const ForwardEntry& entry_;
  const ActionSignature& action_;
  SolverCache& cache_;
  const MatchOptions& options_;

  AbstractTable abstract_;
  std::vector<std::vector<Value>> h_distinct_;
  std::vector<std::map<Value, RowSet>> by_value_;
  std::vector<std::vector<Option>> options_per_col_;
  std::vector<std::size_t> order_;
  std::vector<Option> choice_;
};

}  // namespace

AbstractTable build_abstract_table(const Table& base, const Table& hypothesis) {
  AbstractTable abs;
  abs.base = &base;
  for (std::size_t j = 0; j < hypothesis.column_count(); ++j) {
    if (hypothesis.schema()[j].type == ColumnType::Id || hypothesis.empty()) continue;
    const Value& v = hypothesis.at(0, j);
    bool single = std::all_of(hypothesis.rows().begin(), hypothesis.rows().end(),
                              [&](const Row& r) { return r[j] == v; });
    if (single && std::find(abs.constants.begin(), abs.constants.end(), v) == abs.constants.end()) {
      abs.constants.push_back(v);
    }
  }
  std::vector<std::size_t> ints;
  std::vector<std::size_t> strs;
  for (std::size_t k = 0; k < base.column_count(); ++k) {
    if (base.schema()[k].type == ColumnType::Int) ints.push_back(k);
    if (base.schema()[k].type == ColumnType::Str) strs.push_back(k);
  }
  for (auto fam : {FeatureFamily::Linear, FeatureFamily::Div, FeatureFamily::Mod}) {
    for (auto k : ints) abs.symbolic.push_back({fam, {k}});
  }
  for (std::size_t a = 0; a < ints.size(); ++a) {
    for (std::size_t b = a + 1; b < ints.size(); ++b) abs.symbolic.push_back({FeatureFamily::Sum, {ints[a], ints[b]}});
  }
  for (auto k : strs) abs.symbolic.push_back({FeatureFamily::Substring, {k}});
  if (!strs.empty()) abs.symbolic.push_back({FeatureFamily::Concat, strs});
  return abs;
}

std::optional<FeatureInstance> SolverCache::solve(FeatureFamily family, const std::vector<FeatureExample>& examples,
                                                  const SolverLimits& limits) {
  ++calls_;
  if (!enabled_) return solve_feature(family, examples, limits);
  std::vector<Value> key;
  key.reserve(examples.size() * 3 + 1);
  key.emplace_back(static_cast<std::int64_t>(examples.empty() ? 0 : examples[0].inputs.size()));
  for (const auto& ex : examples) {
    key.insert(key.end(), ex.inputs.begin(), ex.inputs.end());
    key.push_back(ex.output);
  }
  auto k = std::make_pair(static_cast<int>(family), std::move(key));
  auto it = memo_.find(k);
  if (it != memo_.end()) {
    ++hits_;
    return it->second;
  }
  auto result = solve_feature(family, examples, limits);
  memo_.emplace(std::move(k), result);
  return result;
}

std::optional<MatchResult> match_table(const Table& hypothesis, const ForwardEntry& base,
                                       const ActionSignature& action, SolverCache& cache,
                                       const MatchOptions& options) {
  return Matcher(hypothesis, base, action, cache, options).run();
}

std::optional<ForwardMatch> match_hypothesis(const Table& hypothesis, const ForwardSet& forward,
                                             const ActionSignature& action, SolverCache& cache,
                                             const MatchOptions& options) {
  MatchOptions plain = options;
  plain.allow_features = false;
  for (const MatchOptions* opts : {static_cast<const MatchOptions*>(&plain), &options}) {
    for (std::size_t i = 0; i < forward.size(); ++i) {
      if (auto r = match_table(hypothesis, forward[i], action, cache, *opts)) {
        return ForwardMatch{i, std::move(*r)};
      }
    }
    if (!options.allow_features) break;
  }
  return std::nullopt;
}

}  // namespace bee
