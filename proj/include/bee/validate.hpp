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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bee/dsl.hpp"
#include "bee/table.hpp"

namespace bee {

/// A named input table schema.
struct NamedSchema {
  std::string name;
  Schema schema;
};

/// One broken rule. `index` counts statements in program order: transforms
/// first, then mappings.
struct Violation {
  std::size_t index = 0;
  std::string rule;
  std::string message;

  std::string to_string() const;
};

// Rule names reported in Violation::rule.
inline constexpr const char* kRuleDefinedBeforeUse = "defined before use";
inline constexpr const char* kRuleFreshName = "fresh name";
inline constexpr const char* kRuleUnknownColumn = "unknown column";
inline constexpr const char* kRulePredicateType = "predicate type";
inline constexpr const char* kRuleIdJoin = "Id-typed join";
inline constexpr const char* kRuleDistinctJoin = "distinct join tables";
inline constexpr const char* kRuleAggregateType = "aggregate type";
inline constexpr const char* kRuleOrderType = "orderable column";
inline constexpr const char* kRuleNonemptyMapping = "nonempty mapping";
inline constexpr const char* kRuleActionConstant = "action constant";
inline constexpr const char* kRuleArity = "projection arity";
inline constexpr const char* kRuleArgumentType = "argument type";
inline constexpr const char* kRuleFeatureType = "feature type";

/// Checks the program statically. Never throws; returns every violation found.
std::vector<Violation> validate_program(const Program& program, std::span<const NamedSchema> inputs,
                                        const ActionSignature& action);

std::vector<NamedSchema> schemas_of(std::span<const Table> tables);

/// Schema of a transform's result given the schemas of its operands, or the
/// violations that prevent computing it.
struct TransformCheck {
  std::optional<Schema> schema;
  std::vector<std::pair<std::string, std::string>> problems;  // (rule, message)
};
TransformCheck check_transform(const TransformOp& op,
                               const std::function<const Schema*(const std::string&)>& lookup);

}  // namespace bee
