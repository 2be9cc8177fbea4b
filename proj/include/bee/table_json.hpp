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

#include "bee/table.hpp"
#include "json.hpp"

namespace bee {

using json = nlohmann::json;

// Wire format:
//   {"name": "...", "columns": [{"name": "...", "type": "Int|Str|Id"}, ...],
//    "rows": [[...], ...]}
// Int cells are JSON integers, Str cells JSON strings, Id cells {"id": "<label>"}.

json value_to_json(const Value& value);
/// Throws ParseError for floats, booleans, nulls, and malformed Id objects.
Value value_from_json(const json& j);

json schema_to_json(const Schema& schema);
Schema schema_from_json(const json& j);

/// Rows are written in canonical order, so output is deterministic.
json table_to_json(const Table& table);
Table table_from_json(const json& j);

/// Parses JSON text, rethrowing nlohmann parse errors as ParseError.
json parse_json_text(const std::string& text, const std::string& origin);
json read_json_file(const std::string& path);

}  // namespace bee
