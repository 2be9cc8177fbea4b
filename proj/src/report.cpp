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

#include "bee/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include "bee/error.hpp"
#include "bee/interpreter.hpp"
#include "bee/program_text.hpp"

namespace bee {

SynthTask task_from_case(const BenchmarkCase& c, const SynthSettings& settings) {
  return SynthTask{c.inputs, c.output, c.action, c.constants, settings};
}

bool CaseReport::passes() const { return outcome == "solved" && !overfit && reference_ok.value_or(true); }

std::size_t RunReport::solved() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseReport& c) { return c.outcome == "solved"; }));
}

std::size_t RunReport::overfit() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseReport& c) {
    return c.outcome == "solved" && c.overfit;
  }));
}

double RunReport::success_rate() const {
  return cases.empty() ? 0.0 : static_cast<double>(solved()) / static_cast<double>(cases.size());
}

double RunReport::overfit_rate() const {
  const auto s = solved();
  return s == 0 ? 0.0 : static_cast<double>(overfit()) / static_cast<double>(s);
}

namespace {

bool reference_holds(const BenchmarkCase& c) {
  try {
    Program p = parse_program(*c.reference_program);
    if (!(exec_program(p, c.inputs, c.action) == c.output)) return false;
    return !check_overfit(c, p).overfit;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

CaseReport run_case(const BenchmarkCase& c, const SynthSettings& settings) {
  CaseReport r;
  r.id = c.id;
  r.regression = c.regression;
  if (c.reference_program) r.reference_ok = reference_holds(c);
  try {
    SynthResult res = synthesize(task_from_case(c, settings));
    r.outcome = std::string(to_string(res.outcome));
    r.elapsed_ms = res.stats.elapsed_ms;
    r.forward_tables = res.stats.forward_tables;
    r.hypotheses_tried = res.stats.hypotheses_tried;
    if (res.program) {
      r.program = format_program(*res.program);
      OverfitReport of = check_overfit(c, *res.program);
      r.overfit = of.overfit;
      if (of.overfit) r.error = of.to_string();
    }
  } catch (const Error& e) {
    r.outcome = "error";
    r.error = e.what();
  }
  return r;
}

CaseReport run_case_file(const std::string& path, const SynthSettings& settings) {
  try {
    CaseReport r = run_case(load_benchmark(path), settings);
    r.path = path;
    return r;
  } catch (const Error& e) {
    CaseReport r;
    r.id = path;
    r.path = path;
    r.load_failed = true;
    r.outcome = "error";
    r.error = e.what();
    return r;
  }
}

RunReport run_bench(const std::vector<std::string>& files, const SynthSettings& settings, int jobs) {
  RunReport report;
  report.mode = settings.mode;
  report.cases.resize(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) report.cases[i] = run_case_file(files[i], settings);
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(files.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::stable_sort(report.cases.begin(), report.cases.end(),
                   [](const CaseReport& a, const CaseReport& b) { return a.id < b.id; });
  return report;
}

json report_to_json(const RunReport& report) {
  json cases = json::array();
  for (const auto& c : report.cases) {
    json j{{"id", c.id},
           {"path", c.path},
           {"regression", c.regression},
           {"outcome", c.outcome},
           {"elapsed_ms", c.elapsed_ms},
           {"overfit", c.overfit},
           {"program", c.program},
           {"error", c.error},
           {"forward_tables", c.forward_tables},
           {"hypotheses_tried", c.hypotheses_tried},
           {"reference_ok", c.reference_ok ? json(*c.reference_ok) : json(nullptr)}};
    cases.push_back(std::move(j));
  }
  json aggregate{{"total", report.cases.size()},
                 {"solved", report.solved()},
                 {"overfit", report.overfit()},
                 {"success_rate", report.success_rate()},
                 {"overfit_rate", report.overfit_rate()}};
  return json{{"mode", std::string(to_string(report.mode))}, {"cases", cases}, {"aggregate", aggregate}};
}

json reports_to_json(const std::vector<RunReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return json{{"reports", arr}};
}

std::string render_report(const RunReport& report) {
  std::ostringstream s;
  s << "mode: " << to_string(report.mode) << "\n";
  std::size_t width = 4;
  for (const auto& c : report.cases) width = std::max(width, c.id.size());
  char line[512];
  std::snprintf(line, sizeof line, "%-*s  %-9s  %9s  %-7s  %s\n", static_cast<int>(width), "case", "outcome",
                "ms", "overfit", "reference");
  s << line;
  for (const auto& c : report.cases) {
    const char* ref = !c.reference_ok ? "-" : (*c.reference_ok ? "ok" : "BROKEN");
    std::snprintf(line, sizeof line, "%-*s  %-9s  %9lld  %-7s  %s\n", static_cast<int>(width), c.id.c_str(),
                  c.outcome.c_str(), static_cast<long long>(c.elapsed_ms), c.overfit ? "yes" : "no", ref);
    s << line;
  }
  std::snprintf(line, sizeof line, "solved %zu/%zu (%.1f%%), over-fitting %zu/%zu (%.1f%%)\n", report.solved(),
                report.cases.size(), 100.0 * report.success_rate(), report.overfit(), report.solved(),
                100.0 * report.overfit_rate());
  s << line;
  return s.str();
}

}  // namespace bee
