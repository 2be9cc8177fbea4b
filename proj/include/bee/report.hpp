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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bee/domains.hpp"
#include "bee/synth_task.hpp"
#include "bee/synthesizer.hpp"
#include "bee/table_json.hpp"

namespace bee {

SynthTask task_from_case(const BenchmarkCase& c, const SynthSettings& settings);

struct CaseReport {
  std::string id;
  std::string path;
  bool regression = false;
  std::string outcome;  // solved | timeout | exhausted | error
  std::int64_t elapsed_ms = 0;
  bool overfit = false;
  std::string program;  // canonical text when solved
  std::string error;    // load/engine error or over-fit diagnostic
  std::size_t forward_tables = 0;
  std::size_t hypotheses_tried = 0;
  // Committed reference program: reproduces the output and generalizes.
  std::optional<bool> reference_ok;
  bool load_failed = false;  // the file could not be read as a benchmark

  /// A regression case passes when it is solved without over-fitting and its
  /// reference program (if any) still holds.
  bool passes() const;
};

struct RunReport {
  SearchMode mode = SearchMode::Bidirectional;
  std::vector<CaseReport> cases;  // sorted by id

  std::size_t solved() const;
  std::size_t overfit() const;
  /// solved / total; 0 for an empty report.
  double success_rate() const;
  /// overfit / solved; 0 when nothing was solved.
  double overfit_rate() const;
};

/// Synthesizes one case and judges over-fitting on its pending data.
CaseReport run_case(const BenchmarkCase& c, const SynthSettings& settings);
/// Loads and runs one benchmark file; load errors become an "error" outcome.
CaseReport run_case_file(const std::string& path, const SynthSettings& settings);

/// Runs every file with `jobs` workers. Reports are ordered by case id.
RunReport run_bench(const std::vector<std::string>& files, const SynthSettings& settings, int jobs);

json report_to_json(const RunReport& report);
json reports_to_json(const std::vector<RunReport>& reports);
std::string render_report(const RunReport& report);

}  // namespace bee
