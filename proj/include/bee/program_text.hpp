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

#include <string>
#include <string_view>

#include "bee/dsl.hpp"

namespace bee {

// Canonical text form, one statement per line:
//
//   u = Filter(ti, isOdd(frame));
//   j = Join(a, b, id, parent);
//   g = GroupJoin(files, folder, (max, size), (cnt, id));
//   o = Order(t, score, 0, false, group);
//   Yield("shift", u, id, "GB", linear(-5,-25)(frame), linear(-5,-25)(frame));
//
// The first Yield argument is the action constant, the second the source
// table. Identifiers that are not plain are written in backticks; `//` starts a
// comment.

std::string format_predicate(const Predicate& predicate);
std::string format_projection(const Projection& projection);
std::string format_transform(const TransformStmt& stmt);
std::string format_mapping(const MappingStmt& stmt);
/// One statement per line, each terminated by a newline.
std::string format_program(const Program& program);

/// Throws ParseError with line and column on malformed input.
Program parse_program(std::string_view text);
Predicate parse_predicate(std::string_view text);

}  // namespace bee
