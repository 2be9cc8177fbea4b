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

#include "bee/hypotheses.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace bee {

Table subtable(const Table& output, const RowSet& rows) {
  std::vector<Row> out;
  for (auto i : rows.indices()) out.push_back(output.rows()[i]);
  return Table(output.name(), output.schema(), std::move(out));
}

bool ConcatCoverage::greedy_cover(const std::string& value, const std::vector<std::string>& fields) {
  std::size_t pos = 0;
  while (pos < value.size()) {
    std::size_t best = 0;
    for (std::size_t len = value.size() - pos; len > 0 && best == 0; --len) {
      std::string_view piece(value.data() + pos, len);
      for (const auto& f : fields) {
        if (f.find(piece) != std::string::npos) {
          best = len;
          break;
        }
      }
    }
    if (best == 0) return false;
    pos += best;
  }
  return true;
}

ConcatCoverage::ConcatCoverage(const Table& output, const std::vector<Table>& inputs) {
  std::vector<std::vector<std::string>> input_rows;
  for (const auto& t : inputs) {
    for (const auto& r : t.rows()) {
      std::vector<std::string> fields;
      for (std::size_t c = 0; c < t.column_count(); ++c) {
        if (r[c].is_str()) fields.push_back(r[c].as_str());
      }
      if (!fields.empty()) input_rows.push_back(std::move(fields));
    }
  }
  cells_.assign(output.row_count(), std::vector<bool>(output.column_count(), false));
  std::map<std::string, bool> memo;
  for (std::size_t i = 0; i < output.row_count(); ++i) {
    for (std::size_t c = 0; c < output.column_count(); ++c) {
      const Value& v = output.at(i, c);
      if (!v.is_str()) continue;
      auto it = memo.find(v.as_str());
      if (it == memo.end()) {
        bool ok = false;
        for (const auto& fields : input_rows) {
          if (greedy_cover(v.as_str(), fields)) {
            ok = true;
            break;
          }
        }
        it = memo.emplace(v.as_str(), ok).first;
      }
      cells_[i][c] = it->second;
    }
  }
}

std::int64_t score_subtable(const Table& output, const RowSet& rows, const ConcatCoverage& coverage) {
  auto idx = rows.indices();
  if (idx.empty()) return 0;
  std::int64_t per_row = 0;
  for (std::size_t c = 0; c < output.column_count(); ++c) {
    const Value& first = output.at(idx[0], c);
    bool constant = true;
    for (auto i : idx) constant = constant && output.at(i, c) == first;
    per_row += constant ? 1 : 0;

    if (output.schema()[c].type == ColumnType::Int && idx.size() >= 2) {
      std::vector<std::int64_t> vals;
      for (auto i : idx) vals.push_back(output.at(i, c).as_int());
      std::sort(vals.begin(), vals.end());
      bool consecutive = true;
      for (std::size_t k = 1; k < vals.size() && consecutive; ++k) {
        consecutive = vals[k - 1] < vals[k] && vals[k] - vals[k - 1] == 1;
      }
      per_row += consecutive ? 1 : 0;
    }

    if (output.schema()[c].type == ColumnType::Str) {
      bool all = true;
      for (auto i : idx) all = all && coverage.coverable(i, c);
      per_row += all ? 1 : 0;
    }
  }
  return per_row * static_cast<std::int64_t>(idx.size());
}

bool hypothesis_before(const Hypothesis& a, const Hypothesis& b) {
  if (a.score != b.score) return a.score > b.score;
  std::size_t ca = a.rows.count();
  std::size_t cb = b.rows.count();
  if (ca != cb) return ca > cb;
  return lex_less(a.rows, b.rows);
}

std::vector<Hypothesis> hypothesis_pool(const Table& output, const ConcatCoverage& coverage,
                                        const std::vector<RowSet>& extra) {
  const std::size_t n = output.row_count();
  std::vector<std::pair<RowSet, std::string>> base;
  base.emplace_back(RowSet::full(n), "full-table");

  for (std::size_t c = 0; c < output.column_count(); ++c) {
    // Value groups.
    std::map<Value, RowSet> groups;
    for (std::size_t i = 0; i < n; ++i) {
      auto [it, inserted] = groups.try_emplace(output.at(i, c), RowSet(n));
      it->second.set(i);
    }
    for (auto& [v, rs] : groups) base.emplace_back(rs, "signature-group");

    // Consecutive integer runs over distinct values.
    if (output.schema()[c].type == ColumnType::Int) {
      std::vector<std::pair<std::int64_t, std::size_t>> vals;
      for (std::size_t i = 0; i < n; ++i) vals.emplace_back(output.at(i, c).as_int(), i);
      std::sort(vals.begin(), vals.end());
      std::size_t k = 0;
      while (k < vals.size()) {
        RowSet run(n);
        run.set(vals[k].second);
        std::size_t j = k + 1;
        bool distinct = true;
        while (j < vals.size() && vals[j].first - vals[j - 1].first <= 1) {
          if (vals[j].first == vals[j - 1].first) distinct = false;
          run.set(vals[j].second);
          ++j;
        }
        if (distinct && j - k >= 2) base.emplace_back(run, "consecutive-run");
        k = j;
      }
    }

    // Concat-coverable rows.
    if (output.schema()[c].type == ColumnType::Str) {
      RowSet ok(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (coverage.coverable(i, c)) ok.set(i);
      }
      if (!ok.none()) base.emplace_back(ok, "concat-group");
    }
  }
  for (const auto& rs : extra) base.emplace_back(rs, "id-anchored");

  std::vector<Hypothesis> out;
  std::unordered_set<RowSet> seen;
  auto push = [&](const RowSet& rs, const std::string& prov) {
    if (rs.none() || !seen.insert(rs).second) return;
    out.push_back({rs, score_subtable(output, rs, coverage), prov});
  };
  for (const auto& [rs, prov] : base) push(rs, prov);
  const std::size_t base_count = out.size();
  for (std::size_t a = 0; a < base_count; ++a) {
    for (std::size_t b = a + 1; b < base_count; ++b) push(out[a].rows & out[b].rows, "intersection");
  }
  const std::size_t with_intersections = out.size();
  for (std::size_t a = 0; a < with_intersections; ++a) push(out[a].rows.complement(), "complement");
  std::sort(out.begin(), out.end(), hypothesis_before);
  return out;
}

HypothesisGenerator::HypothesisGenerator(std::vector<Hypothesis> pool, int bound, std::vector<RowSet> matched,
                                         std::function<std::int64_t(const RowSet&)> scorer, Feasible feasible)
    : bound_(bound), scorer_(std::move(scorer)), feasible_(std::move(feasible)) {
  for (auto& h : pool) {
    if (feasible_ && !feasible_(h.rows)) continue;
    pending_.push_back(std::move(h));
  }
  std::stable_sort(pending_.begin(), pending_.end(), hypothesis_before);
  // Earlier matches are not retried and their subsets rank last, but a fresh
  // generator starts from the score order: no complement promotion.
  for (const auto& m : matched) {
    seen_.insert(m);
    matched_.push_back(m);
    std::stable_partition(pending_.begin(), pending_.end(),
                          [&](const Hypothesis& h) { return !h.rows.is_subset_of(m); });
  }
}

void HypothesisGenerator::promote(const RowSet& rows, const std::string& provenance) {
  if (rows.none() || seen_.count(rows)) return;
  if (feasible_ && !feasible_(rows)) return;
  for (const auto& f : front_) {
    if (f.rows == rows) return;
  }
  front_.push_front(Hypothesis{rows, scorer_(rows), provenance});
}

void HypothesisGenerator::update_rank(const RowSet& matched) {
  matched_.push_back(matched);
  auto first = pending_.begin() + static_cast<std::ptrdiff_t>(cursor_);
  std::stable_partition(first, pending_.end(),
                        [&](const Hypothesis& h) { return !h.rows.is_subset_of(matched); });
  RowSet covered = matched;
  for (const auto& m : matched_) covered = covered | m;
  promote(covered.complement(), "complement");
  promote(matched.complement(), "complement");
}

std::optional<Hypothesis> HypothesisGenerator::next() {
  while (emitted_ < bound_) {
    Hypothesis h;
    if (!front_.empty()) {
      h = std::move(front_.front());
      front_.pop_front();
    } else if (cursor_ < pending_.size()) {
      h = pending_[cursor_++];
    } else {
      return std::nullopt;
    }
    if (!seen_.insert(h.rows).second) continue;
    ++emitted_;
    return h;
  }
  return std::nullopt;
}

}  // namespace bee
