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

// Random tables, predicates and programs for property tests.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bee/dsl.hpp"
#include "bee/features.hpp"
#include "bee/interpreter.hpp"
#include "bee/table.hpp"

namespace bee::gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  return items[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(items.size()) - 1))];
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline std::string random_word(Rng& rng) {
  static const std::vector<std::string> pieces{"ab", "Cd", "12", "7", "x9", "pdf", "Q", "-", ".", "_", " "};
  std::string s;
  const int n = uniform(rng, 1, 4);
  for (int i = 0; i < n; ++i) s += pick(rng, pieces);
  return s;
}

// <id:Id, g:Str, n:Int, m:Int, s:Str, k:Id>; n, m small, g and k from tiny pools.
inline Schema law_schema() {
  return Schema({{"id", ColumnType::Id},
                 {"g", ColumnType::Str},
                 {"n", ColumnType::Int},
                 {"m", ColumnType::Int},
                 {"s", ColumnType::Str},
                 {"k", ColumnType::Id}});
}

inline Table random_law_table(Rng& rng, const std::string& name, int max_rows) {
  static const std::vector<std::string> groups{"x", "y", "z"};
  std::vector<Row> rows;
  const int n = uniform(rng, 0, max_rows);
  for (int i = 0; i < n; ++i) {
    rows.push_back({Value::id(name + "_" + std::to_string(i)), pick(rng, groups), uniform(rng, -5, 5),
                    uniform(rng, -3, 3), random_word(rng), Value::id("k" + std::to_string(uniform(rng, 1, 3)))});
  }
  return Table(name, law_schema(), std::move(rows));
}

inline Predicate random_leaf(Rng& rng) {
  switch (uniform(rng, 0, 9)) {
    case 0:
      return Predicate::atom({PredicateSymbol::IsOdd, "n", std::nullopt});
    case 1:
      return Predicate::atom({PredicateSymbol::IsEven, "m", std::nullopt});
    case 2:
      return Predicate::atom({PredicateSymbol::IntLt, "n", Operand(Value(uniform(rng, -4, 4)))});
    case 3:
      return Predicate::atom({PredicateSymbol::IntGeq, "m", Operand(Value(uniform(rng, -2, 2)))});
    case 4:
      return Predicate::atom({PredicateSymbol::IntEq, "n", Operand(ColumnRef{"m"})});
    case 5:
      return Predicate::atom({PredicateSymbol::IntLeq, "n", Operand(ColumnRef{"m"})});
    case 6:
      return Predicate::atom({PredicateSymbol::StrEq, "g", Operand(Value(std::string(1, "xyz"[uniform(rng, 0, 2)])))});
    case 7:
      return Predicate::atom({PredicateSymbol::IsSubstring, "s", Operand(Value("ab"))});
    case 8:
      return Predicate::atom({PredicateSymbol::StartsWith, "s", Operand(Value("12"))});
    default:
      return Predicate::atom({PredicateSymbol::EndsWith, "s", Operand(Value("."))});
  }
}

inline Predicate random_predicate(Rng& rng, int depth = 2) {
  if (depth == 0 || coin(rng, 0.4)) return random_leaf(rng);
  switch (uniform(rng, 0, 2)) {
    case 0:
      return Predicate::conj(random_predicate(rng, depth - 1), random_predicate(rng, depth - 1));
    case 1:
      return Predicate::disj(random_predicate(rng, depth - 1), random_predicate(rng, depth - 1));
    default:
      return Predicate::negate(random_predicate(rng, depth - 1));
  }
}

inline ActionSignature task_action() {
  return ActionSignature{"act", {{"item", ColumnType::Id}, {"n", ColumnType::Int}, {"label", ColumnType::Str}}};
}

// A task produced by running a random program: the program is the oracle.
struct RandomTask {
  std::vector<Table> inputs;
  Table output{"act", task_action().output_schema(), {}};
  ActionSignature action;
  std::vector<Value> constants;
  Program program;
};

namespace detail {

inline Table task_input(Rng& rng) {
  static const std::vector<std::string> stems{"report", "Memo", "data", "img", "notes", "Plan"};
  static const std::vector<std::string> groups{"red", "blue"};
  std::vector<Row> rows;
  const int n = uniform(rng, 3, 5);
  for (int i = 1; i <= n; ++i) {
    std::string s = pick(rng, stems) + std::to_string(uniform(rng, 1, 99)) + "." + (coin(rng) ? "txt" : "pdf");
    rows.push_back({Value::id("r" + std::to_string(i)), i, uniform(rng, 0, 30), s, pick(rng, groups)});
  }
  return Table("t",
               Schema({{"id", ColumnType::Id},
                       {"a", ColumnType::Int},
                       {"b", ColumnType::Int},
                       {"s", ColumnType::Str},
                       {"g", ColumnType::Str}}),
               std::move(rows));
}

inline Projection int_projection(Rng& rng, bool has_ord) {
  switch (uniform(rng, 0, has_ord ? 7 : 6)) {
    case 0:
      return ColProj{"a"};
    case 1:
      return ColProj{"b"};
    case 2:
      return ConstProj{Value(uniform(rng, 0, 9))};
    case 3:
      return MutateProj{FeatureInstance(LinearFeature{uniform(rng, -5, 5), uniform(rng, -20, 20)}), {"a"}};
    case 4: {
      const int d = uniform(rng, 2, 10);
      return MutateProj{FeatureInstance(ModFeature{uniform(rng, 0, d - 1), uniform(rng, -3, 3), d}), {"b"}};
    }
    case 5:
      return MutateProj{FeatureInstance(DivFeature{uniform(rng, -3, 3), uniform(rng, 2, 6)}), {"b"}};
    case 6:
      return MutateProj{FeatureInstance(SumFeature{uniform(rng, -10, 10)}), {"a", "b"}};
    default:
      return ColProj{"ord_b"};
  }
}

inline Projection str_projection(Rng& rng) {
  static const std::vector<std::string> labels{"keep", "drop", "Pass"};
  switch (uniform(rng, 0, 3)) {
    case 0:
      return ConstProj{Value(pick(rng, labels))};
    case 1:
      return ColProj{"g"};
    case 2:
      return MutateProj{FeatureInstance(SubstringFeature{ExtractSpec{{TokenClass{TokenKind::Alpha}}, 1}}), {"s"}};
    default:
      return MutateProj{FeatureInstance(SubstringFeature{ExtractSpec{{TokenClass{TokenKind::Digits}}, 1}}), {"s"}};
  }
}

inline Predicate task_leaf(Rng& rng, const std::vector<Value>& constants) {
  switch (uniform(rng, 0, 4)) {
    case 0:
      return Predicate::atom({PredicateSymbol::IsOdd, "a", std::nullopt});
    case 1:
      return Predicate::atom({PredicateSymbol::IsEven, "b", std::nullopt});
    case 2:
      return Predicate::atom({PredicateSymbol::StrEq, "g", Operand(Value("red"))});
    case 3:
      return Predicate::atom({PredicateSymbol::EndsWith, "s", Operand(Value("pdf"))});
    default:
      return Predicate::atom({PredicateSymbol::IntLt, "b", Operand(constants.front())});
  }
}

}  // namespace detail

// Depth <= 2, at most two Yields, features within solver caps.
inline std::optional<RandomTask> random_task(Rng& rng) {
  RandomTask task;
  task.inputs.push_back(detail::task_input(rng));
  task.action = task_action();
  task.constants = {Value(uniform(rng, 5, 25)), Value("red"), Value("pdf")};
  const int shape = uniform(rng, 0, 4);
  std::vector<std::string> sources;
  bool has_ord = false;
  switch (shape) {
    case 0:  // straight projection
      sources = {"t"};
      break;
    case 1: {  // complementary filters
      Predicate p = detail::task_leaf(rng, task.constants);
      task.program.transforms.push_back({"u", FilterOp{"t", p}});
      task.program.transforms.push_back({"v", FilterOp{"t", Predicate::negate(p)}});
      sources = {"u", "v"};
      break;
    }
    case 2: {  // one two-symbol filter
      Predicate p = Predicate::conj(detail::task_leaf(rng, task.constants), detail::task_leaf(rng, task.constants));
      if (coin(rng)) p = Predicate::disj(p.children[0], p.children[1]);
      task.program.transforms.push_back({"u", FilterOp{"t", p}});
      sources = {"u"};
      break;
    }
    case 3:  // rank column
      task.program.transforms.push_back({"u", OrderOp{"t", "b", uniform(rng, 0, 2), coin(rng), std::nullopt}});
      sources = {"u"};
      has_ord = true;
      break;
    default:  // per-group maximum, then a filter on it
      task.program.transforms.push_back({"u", GroupJoinOp{"t", "g", {{Aggregate::Max, "b"}}}});
      task.program.transforms.push_back(
          {"v", FilterOp{"u", Predicate::atom({PredicateSymbol::IntEq, "b", Operand(ColumnRef{"max_b"})})}});
      sources = {"v"};
      break;
  }
  for (const auto& src : sources) {
    task.program.mappings.push_back(MappingStmt{
        src,
        {ConstProj{Value("act")}, ColProj{"id"}, detail::int_projection(rng, has_ord), detail::str_projection(rng)}});
  }
  try {
    task.output = exec_program(task.program, task.inputs, task.action);
  } catch (const std::exception&) {
    return std::nullopt;  // a feature did not apply to some row
  }
  if (task.output.empty()) return std::nullopt;
  return task;
}

inline RandomTask next_task(Rng& rng) {
  for (;;) {
    if (auto t = random_task(rng)) return *t;
  }
}

}  // namespace bee::gen
