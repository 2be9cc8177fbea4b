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
#include <vector>

#include "bee/dsl.hpp"
#include "bee/table.hpp"

namespace bee::fixtures {

inline Schema frames_schema() {
  return Schema({{"file", ColumnType::Str}, {"frame", ColumnType::Int}, {"id", ColumnType::Id}});
}

inline Table frames(const std::string& name, int first, int last) {
  std::vector<Row> rows;
  for (int f = first; f <= last; ++f) rows.push_back({"tiktok.jpg", f, Value::id("f" + std::to_string(f))});
  return Table(name, frames_schema(), std::move(rows));
}

inline Table frames_in() { return frames("ti", 1, 4); }

inline ActionSignature shift_action() {
  return ActionSignature{"shift",
                         {{"id", ColumnType::Id},
                          {"channel", ColumnType::Str},
                          {"bx", ColumnType::Int},
                          {"by", ColumnType::Int}}};
}

// Odd frames move left, even frames right, by 10 more every two frames.
inline Row shift_row(int frame) {
  const std::int64_t mag = 10 * ((frame + 1) / 2) + 20;
  const std::int64_t v = frame % 2 ? -mag : mag;
  return {"shift", Value::id("f" + std::to_string(frame)), "GB", v, v};
}

inline Table shift_rows(int first, int last) {
  std::vector<Row> rows;
  for (int f = first; f <= last; ++f) rows.push_back(shift_row(f));
  return Table("shift", shift_action().output_schema(), std::move(rows));
}

inline Table shift_out() { return shift_rows(1, 4); }

}  // namespace bee::fixtures
