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

#include "bee/synthesizer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include "bee/error.hpp"
#include "bee/hypotheses.hpp"
#include "bee/interpreter.hpp"
#include "bee/matcher.hpp"
#include "bee/validate.hpp"

namespace bee {

std::string_view to_string(SynthOutcome outcome) {
  switch (outcome) {
    case SynthOutcome::Solved:
      return "solved";
    case SynthOutcome::Timeout:
      return "timeout";
    case SynthOutcome::Exhausted:
      return "exhausted";
  }
  return "?";
}

std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::Bidirectional ? "bi" : "forward-only";
}

namespace {

ForwardOptions forward_options(const SynthSettings& s) {
  ForwardOptions o;
  o.groupjoin_max_aggs = s.groupjoin_max_aggs;
  o.max_tables = s.max_forward_tables;
  o.merge_equivalent = s.merge_equivalent_tables;
  return o;
}

MatchOptions match_options(const SynthSettings& s, const Deadline& deadline) {
  MatchOptions o;
  o.limits = s.solver;
  o.row_map_cap = s.row_map_cap;
  o.deadline = &deadline;
  return o;
}

std::vector<std::size_t> id_columns(const Table& output) {
  std::vector<std::size_t> out;
  for (std::size_t c = 1; c < output.column_count(); ++c) {
    if (output.schema()[c].type == ColumnType::Id) out.push_back(c);
  }
  return out;
}

// Which forward tables could yield a given set of Id values in one column.
// Yields copy Id columns verbatim, so a hypothesis is only matchable by a
// table holding, for every Id column, a column with exactly the same values.
class IdIndex {
 public:
  IdIndex(const ForwardSet& forward, const Table& output) : output_(output), id_cols_(id_columns(output)) {
    for (std::size_t e = 0; e < forward.size(); ++e) {
      const auto& entry = forward[e];
      for (std::size_t c = 0; c < entry.table.column_count(); ++c) {
        if (entry.table.schema()[c].type != ColumnType::Id) continue;
        auto& list = by_values_[entry.distinct[c]];
        if (list.empty() || list.back() != e) list.push_back(e);
      }
      sizes_.push_back(entry.table.row_count());
    }
    for (auto c : id_cols_) {
      std::map<Value, RowSet> rows;
      for (std::size_t r = 0; r < output.row_count(); ++r) {
        auto [it, inserted] = rows.try_emplace(output.at(r, c), RowSet(output.row_count()));
        it->second.set(r);
      }
      rows_by_value_.push_back(std::move(rows));
    }
  }

  bool has_id_columns() const { return !id_cols_.empty(); }

  bool feasible(const RowSet& rows) const {
    if (id_cols_.empty()) return true;
    const std::size_t need = rows.count();
    std::vector<std::size_t> candidates;
    bool first = true;
    for (auto c : id_cols_) {
      std::vector<Value> vals;
      for (auto r : rows.indices()) vals.push_back(output_.at(r, c));
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      auto it = by_values_.find(vals);
      if (it == by_values_.end()) return false;
      if (first) {
        candidates = it->second;
        first = false;
      } else {
        std::vector<std::size_t> both;
        std::set_intersection(candidates.begin(), candidates.end(), it->second.begin(), it->second.end(),
                              std::back_inserter(both));
        candidates = std::move(both);
      }
      if (candidates.empty()) return false;
    }
    return std::any_of(candidates.begin(), candidates.end(), [&](std::size_t e) { return sizes_[e] >= need; });
  }

  /// Output rows whose Id values are exactly those of some forward column.
  std::vector<RowSet> anchored_groups() const {
    std::vector<RowSet> out;
    std::unordered_set<RowSet> seen;
    for (std::size_t k = 0; k < id_cols_.size(); ++k) {
      for (const auto& [vals, entries] : by_values_) {
        RowSet rs(output_.row_count());
        bool all = true;
        for (const auto& v : vals) {
          auto it = rows_by_value_[k].find(v);
          if (it == rows_by_value_[k].end()) {
            all = false;
            break;
          }
          rs = rs | it->second;
        }
        if (all && !rs.none() && seen.insert(rs).second) out.push_back(std::move(rs));
      }
    }
    return out;
  }

 private:
  const Table& output_;
  std::vector<std::size_t> id_cols_;
  std::map<std::vector<Value>, std::vector<std::size_t>> by_values_;
  std::vector<std::size_t> sizes_;
  std::vector<std::map<Value, RowSet>> rows_by_value_;
};

struct Session {
  const SynthTask& task;
  Deadline deadline;
  ForwardSet forward;
  SolverCache cache;
  std::vector<MatchedHypothesis> matched;
  SynthStats stats;

  explicit Session(const SynthTask& t)
      : task(t),
        deadline(t.settings.timeout),
        forward(t.inputs, t.constants, forward_options(t.settings)),
        cache(t.settings.cache_solver_calls) {
    stats.mode = t.settings.mode;
  }

  void check_task() const {
    if (!(task.output.schema() == task.action.output_schema())) {
      throw SchemaError("output example schema " + task.output.schema().to_string() +
                        " does not match action signature " + task.action.output_schema().to_string());
    }
  }

  // Records a match; returns the assembled program once the matches cover
  // the output.
  std::optional<Program> record(const RowSet& rows, std::int64_t score, ForwardMatch fm) {
    ++stats.matches_solved;
    matched.push_back({rows, score, fm.entry, std::move(fm.result.mapping)});
    auto cover = assemble_mapping(matched, task.output.row_count());
    if (!cover) return std::nullopt;
    std::vector<MappingStmt> mappings;
    std::vector<std::size_t> entries;
    for (auto k : *cover) {
      mappings.push_back(matched[k].mapping);
      entries.push_back(matched[k].entry);
    }
    return assemble_program(forward, mappings, entries, task.inputs, task.output, task.action);
  }

  SynthResult finish(SynthOutcome outcome, std::optional<Program> program) {
    SynthResult r;
    r.outcome = outcome;
    r.program = std::move(program);
    stats.elapsed_ms = deadline.elapsed_ms();
    stats.forward_tables = forward.size();
    r.stats = stats;
    return r;
  }
};

}  // namespace

SynthResult synthesize(const SynthTask& task) {
  return task.settings.mode == SearchMode::ForwardOnly ? synthesize_forward_only(task)
                                                       : synthesize_bidirectional(task);
}

SynthResult synthesize_bidirectional(const SynthTask& task) {
  Session s(task);
  s.check_task();
  const Table& output = task.output;
  if (output.empty()) return s.finish(SynthOutcome::Exhausted, std::nullopt);
  ConcatCoverage coverage(output, task.inputs);
  auto scorer = [&](const RowSet& rows) { return score_subtable(output, rows, coverage); };
  MatchOptions mopts = match_options(task.settings, s.deadline);
  try {
    for (int depth = 1; depth <= task.settings.max_depth; ++depth) {
      s.forward.expand(depth, &s.deadline);
      IdIndex index(s.forward, output);
      auto pool = hypothesis_pool(output, coverage, index.anchored_groups());
      std::vector<RowSet> done;
      for (const auto& m : s.matched) done.push_back(m.rows);
      HypothesisGenerator gen(std::move(pool), task.settings.hypothesis_bound, std::move(done), scorer,
                              [&](const RowSet& rows) { return index.feasible(rows); });
      while (auto h = gen.next()) {
        s.deadline.check();
        ++s.stats.hypotheses_tried;
        Table sub = subtable(output, h->rows);
        auto fm = match_hypothesis(sub, s.forward, task.action, s.cache, mopts);
        if (!fm) continue;
        gen.update_rank(h->rows);
        if (auto program = s.record(h->rows, h->score, std::move(*fm))) {
          return s.finish(SynthOutcome::Solved, std::move(program));
        }
      }
    }
  } catch (const TimeoutSignal&) {
    return s.finish(SynthOutcome::Timeout, std::nullopt);
  }
  return s.finish(SynthOutcome::Exhausted, std::nullopt);
}

SynthResult synthesize_forward_only(const SynthTask& task) {
  Session s(task);
  s.check_task();
  const Table& output = task.output;
  const std::size_t n = output.row_count();
  if (n == 0) return s.finish(SynthOutcome::Exhausted, std::nullopt);
  MatchOptions mopts = match_options(task.settings, s.deadline);
  std::unordered_set<RowSet> matched_sets;
  try {
    std::size_t processed = 0;
    for (int depth = 1; depth <= task.settings.max_depth; ++depth) {
      s.forward.expand(depth, &s.deadline);
      for (; processed < s.forward.size(); ++processed) {
        const ForwardEntry& entry = s.forward[processed];
        // Every subset of the output, largest first.
        for (std::size_t size = n; size >= 1; --size) {
          std::vector<std::size_t> pick(size);
          for (std::size_t k = 0; k < size; ++k) pick[k] = k;
          while (true) {
            s.deadline.check();
            RowSet rows = RowSet::of(n, pick);
            if (!matched_sets.count(rows)) {
              ++s.stats.hypotheses_tried;
              Table sub = subtable(output, rows);
              if (auto r = match_table(sub, entry, task.action, s.cache, mopts)) {
                matched_sets.insert(rows);
                if (auto program = s.record(rows, 0, ForwardMatch{processed, std::move(*r)})) {
                  return s.finish(SynthOutcome::Solved, std::move(program));
                }
              }
            }
            // Next combination in lexicographic order.
            std::size_t k = size;
            while (k > 0 && pick[k - 1] == n - size + k - 1) --k;
            if (k == 0) break;
            ++pick[k - 1];
            for (std::size_t q = k; q < size; ++q) pick[q] = pick[q - 1] + 1;
          }
        }
      }
    }
  } catch (const TimeoutSignal&) {
    return s.finish(SynthOutcome::Timeout, std::nullopt);
  }
  return s.finish(SynthOutcome::Exhausted, std::nullopt);
}

std::optional<std::vector<std::size_t>> assemble_mapping(const std::vector<MatchedHypothesis>& matched,
                                                         std::size_t output_rows) {
  std::vector<std::size_t> order(matched.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return matched[a].score > matched[b].score; });
  std::vector<std::size_t> chosen;
  std::function<bool(const RowSet&)> dfs = [&](const RowSet& covered) {
    if (covered.all()) return true;
    std::size_t first = 0;
    while (covered.test(first)) ++first;
    for (auto k : order) {
      const RowSet& rows = matched[k].rows;
      if (!rows.test(first) || rows.intersects(covered)) continue;
      chosen.push_back(k);
      if (dfs(covered | rows)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (output_rows == 0 || !dfs(RowSet(output_rows))) return std::nullopt;
  return chosen;
}

namespace {

// Column-name translation for one table: old name -> new name.
using ColumnMap = std::map<std::string, std::string>;

ColumnMap column_map(const Schema& from, const Schema& to) {
  ColumnMap m;
  for (std::size_t i = 0; i < from.size(); ++i) m[from[i].name] = to[i].name;
  return m;
}

void rename_predicate(Predicate& p, const ColumnMap& cols) {
  if (p.kind != Predicate::Kind::Leaf) {
    for (auto& c : p.children) rename_predicate(c, cols);
    return;
  }
  p.leaf.column = cols.at(p.leaf.column);
  if (p.leaf.operand) {
    if (auto* ref = std::get_if<ColumnRef>(&*p.leaf.operand)) ref->name = cols.at(ref->name);
  }
}


// Order is enumerated with start 0 ascending; a Yield that only reads its
// rank through linear(1,b) or linear(-1,b) is really an Order with other
// parameters. Rewrite to that form when it reproduces the output.
void recover_order_parameters(Program& program, std::span<const Table> inputs, const Table& output,
                              const ActionSignature& action) {
  ExecState state;
  for (const auto& t : inputs) state.insert_or_assign(t.name(), t);
  for (const auto& stmt : program.transforms) state.insert_or_assign(stmt.target, exec_transform(state, stmt));

  for (std::size_t i = 0; i < program.transforms.size(); ++i) {
    const TransformStmt stmt = program.transforms[i];
    const auto* op = std::get_if<OrderOp>(&stmt.op);
    if (!op || op->start != 0 || op->inverse) continue;
    const bool feeds_transform = std::any_of(program.transforms.begin(), program.transforms.end(), [&](const auto& s) {
      auto src = transform_sources(s.op);
      return std::find(src.begin(), src.end(), stmt.target) != src.end();
    });
    if (feeds_transform) continue;
    const Table& ranked = state.at(stmt.target);
    const std::string ord = ranked.schema()[ranked.column_count() - 1].name;

    std::optional<LinearFeature> use;
    bool rewritable = true;
    for (const auto& m : program.mappings) {
      if (m.source != stmt.target) continue;
      for (const auto& p : m.projections) {
        LinearFeature here;
        if (const auto* c = std::get_if<ColProj>(&p)) {
          if (c->column != ord) continue;
        } else if (const auto* mu = std::get_if<MutateProj>(&p)) {
          if (std::find(mu->columns.begin(), mu->columns.end(), ord) == mu->columns.end()) continue;
          if (mu->feature.family() != FeatureFamily::Linear) {
            rewritable = false;
            continue;
          }
          here = mu->feature.as<LinearFeature>();
        } else {
          continue;
        }
        if ((here.a != 1 && here.a != -1) || (use && !(*use == here))) rewritable = false;
        use = here;
      }
    }
    if (!rewritable || !use || (use->a == 1 && use->b == 0)) continue;

    Program candidate = program;
    auto& cop = std::get<OrderOp>(candidate.transforms[i].op);
    if (use->a == 1) {
      cop.start = use->b;
    } else {
      std::int64_t top = 0;
      for (const auto& row : ranked.rows()) top = std::max(top, row.back().as_int());
      cop.start = use->b - top;
      cop.inverse = true;
    }
    for (auto& m : candidate.mappings) {
      if (m.source != stmt.target) continue;
      for (auto& p : m.projections) {
        if (auto* mu = std::get_if<MutateProj>(&p); mu && mu->columns == std::vector<std::string>{ord}) {
          p = ColProj{ord};
        }
      }
    }
    try {
      if (exec_program(candidate, inputs, action) == output) program = std::move(candidate);
    } catch (const Error&) {
      // Keep the original form.
    }
  }
}

}  // namespace

Program assemble_program(const ForwardSet& forward, const std::vector<MappingStmt>& mappings,
                         const std::vector<std::size_t>& entries, const std::vector<Table>& inputs,
                         const Table& output, const ActionSignature& action) {
  // Transforms needed by any Yield, in creation (dependency) order.
  std::map<std::size_t, TransformStmt> needed;
  for (auto e : entries) {
    for (auto& stmt : forward.derivation(e)) {
      needed.emplace(*forward.find_name(stmt.target), stmt);
    }
  }

  std::set<std::string> taken;
  for (const auto& t : inputs) taken.insert(t.name());
  std::map<std::string, std::string> table_names;  // old -> new
  std::map<std::string, ColumnMap> columns;         // per old table name
  std::map<std::string, Schema> new_schemas;        // per new table name
  for (const auto& t : inputs) {
    table_names[t.name()] = t.name();
    columns[t.name()] = column_map(t.schema(), t.schema());
    new_schemas[t.name()] = t.schema();
  }

  Program program;
  std::size_t counter = 1;
  for (auto& [idx, stmt] : needed) {
    std::string name;
    do {
      name = "t" + std::to_string(counter++);
    } while (taken.count(name));
    taken.insert(name);

    TransformStmt out{name, stmt.op};
    std::visit(
        [&](auto& op) {
          using T = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<T, FilterOp>) {
            rename_predicate(op.predicate, columns.at(op.source));
            op.source = table_names.at(op.source);
          } else if constexpr (std::is_same_v<T, JoinOp>) {
            op.left_column = columns.at(op.left).at(op.left_column);
            op.right_column = columns.at(op.right).at(op.right_column);
            op.left = table_names.at(op.left);
            op.right = table_names.at(op.right);
          } else if constexpr (std::is_same_v<T, GroupJoinOp>) {
            const auto& cols = columns.at(op.source);
            op.index = cols.at(op.index);
            for (auto& a : op.aggs) a.column = cols.at(a.column);
            op.source = table_names.at(op.source);
          } else {
            const auto& cols = columns.at(op.source);
            op.column = cols.at(op.column);
            if (op.index) op.index = cols.at(*op.index);
            op.source = table_names.at(op.source);
          }
        },
        out.op);

    auto check = check_transform(out.op, [&](const std::string& n) -> const Schema* {
      auto it = new_schemas.find(n);
      return it == new_schemas.end() ? nullptr : &it->second;
    });
    if (!check.schema) throw InternalError("renamed statement does not type-check: " + stmt.target);
    table_names[stmt.target] = name;
    columns[stmt.target] = column_map(forward[idx].table.schema(), *check.schema);
    new_schemas[name] = *check.schema;
    program.transforms.push_back(std::move(out));
  }

  for (auto m : mappings) {
    const auto& cols = columns.at(m.source);
    for (auto& p : m.projections) {
      if (auto* c = std::get_if<ColProj>(&p)) c->column = cols.at(c->column);
      if (auto* mu = std::get_if<MutateProj>(&p)) {
        for (auto& c : mu->columns) c = cols.at(c);
      }
    }
    m.source = table_names.at(m.source);
    program.mappings.push_back(std::move(m));
  }

  recover_order_parameters(program, inputs, output, action);
  auto violations = validate_program(program, schemas_of(inputs), action);
  if (!violations.empty()) throw InternalError("assembled program is invalid: " + violations.front().to_string());
  Table produced = exec_program(program, inputs, action);
  if (!(produced == output)) throw InternalError("assembled program does not reproduce the output example");
  return program;
}

}  // namespace bee
