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

// bee: synthesize, run and check table-transformation programs.

#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bee/domains.hpp"
#include "bee/error.hpp"
#include "bee/interpreter.hpp"
#include "bee/program_text.hpp"
#include "bee/report.hpp"
#include "bee/synthesizer.hpp"
#include "bee/validate.hpp"

namespace {

using namespace bee;

constexpr int kExitSolved = 0;
constexpr int kExitError = 1;
constexpr int kExitTimeout = 2;
constexpr int kExitExhausted = 3;

// "120s", "1500ms", "2m"; a bare number means seconds.
std::chrono::milliseconds parse_duration(const std::string& text) {
  std::size_t pos = 0;
  long long n = 0;
  try {
    n = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--timeout", "not a duration: " + text);
  }
  std::string unit = text.substr(pos);
  if (n < 0) throw CLI::ValidationError("--timeout", "negative duration");
  if (unit.empty() || unit == "s") return std::chrono::seconds(n);
  if (unit == "ms") return std::chrono::milliseconds(n);
  if (unit == "m") return std::chrono::minutes(n);
  throw CLI::ValidationError("--timeout", "unknown unit '" + unit + "' (use ms, s or m)");
}

struct SettingsFlags {
  std::string timeout = "120s";
  int max_depth = 3;
  int hypothesis_bound = 20;
  std::string mode = "bi";
  unsigned long long seed = 0;  // reserved: the engine is deterministic

  void add_to(CLI::App* app, bool allow_both) {
    app->add_option("--timeout", timeout, "Search budget per case, e.g. 120s or 500ms")
        ->envname("BEE_TIMEOUT")
        ->capture_default_str();
    app->add_option("--max-depth", max_depth, "Maximum transformation depth")
        ->envname("BEE_MAX_DEPTH")
        ->check(CLI::Range(0, 8))
        ->capture_default_str();
    app->add_option("--hypothesis-bound", hypothesis_bound, "Hypotheses tried per depth")
        ->envname("BEE_HYPOTHESIS_BOUND")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    std::vector<std::string> modes{"bi", "forward-only"};
    if (allow_both) modes.push_back("both");
    app->add_option("--mode", mode, "Search mode")
        ->envname("BEE_MODE")
        ->check(CLI::IsMember(modes))
        ->capture_default_str();
    app->add_option("--seed", seed, "Reserved; the search is deterministic")->envname("BEE_SEED");
  }

  SynthSettings settings(SearchMode m) const {
    SynthSettings s;
    s.timeout = parse_duration(timeout);
    s.max_depth = max_depth;
    s.hypothesis_bound = hypothesis_bound;
    s.mode = m;
    return s;
  }

  std::vector<SearchMode> modes() const {
    if (mode == "both") return {SearchMode::Bidirectional, SearchMode::ForwardOnly};
    return {mode == "forward-only" ? SearchMode::ForwardOnly : SearchMode::Bidirectional};
  }
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Tables and action for exec/validate: either a benchmark file (its inputs,
// or its pending tables with --pending) or {"action": {...}, "tables": [...]}.
struct TableSet {
  std::vector<Table> tables;
  ActionSignature action;
};

TableSet load_tables(const std::string& path, bool pending) {
  json j = read_json_file(path);
  if (j.is_object() && j.contains("id") && j.contains("output")) {
    BenchmarkCase c = load_benchmark(path);
    return {pending ? c.pending : c.inputs, c.action};
  }
  if (pending) throw ParseError(path + ": --pending needs a benchmark file");
  if (!j.is_object() || !j.contains("action") || !j.contains("tables") || !j["tables"].is_array()) {
    throw ParseError(path + ": expected a benchmark or an object with 'action' and 'tables'");
  }
  const json& aj = j["action"];
  if (!aj.is_object() || !aj.contains("name") || !aj["name"].is_string() || !aj.contains("args")) {
    throw ParseError(path + ": 'action' needs 'name' and 'args'");
  }
  TableSet out{{}, {aj["name"].get<std::string>(), schema_from_json(aj["args"]).columns()}};
  for (const auto& t : j["tables"]) out.tables.push_back(table_from_json(t));
  return out;
}

json stats_json(const SynthResult& r) {
  return json{{"outcome", std::string(to_string(r.outcome))},
              {"mode", std::string(to_string(r.stats.mode))},
              {"elapsed_ms", r.stats.elapsed_ms},
              {"forward_tables", r.stats.forward_tables},
              {"hypotheses_tried", r.stats.hypotheses_tried},
              {"matches_solved", r.stats.matches_solved}};
}

int cmd_synth(const std::string& path, const SettingsFlags& flags, bool check) {
  BenchmarkCase c = load_benchmark(path);
  SynthResult r = synthesize(task_from_case(c, flags.settings(flags.modes().front())));
  json stats = stats_json(r);
  if (r.program) {
    std::cout << format_program(*r.program);
    if (check) {
      OverfitReport of = check_overfit(c, *r.program);
      stats["overfit"] = of.overfit;
      if (of.overfit) std::cerr << of.to_string() << "\n";
    }
  }
  std::cerr << stats.dump() << "\n";
  switch (r.outcome) {
    case SynthOutcome::Solved:
      return kExitSolved;
    case SynthOutcome::Timeout:
      return kExitTimeout;
    case SynthOutcome::Exhausted:
      return kExitExhausted;
  }
  return kExitError;
}

Program load_valid_program(const std::string& program_path, const TableSet& ts) {
  Program p = parse_program(read_text(program_path));
  auto violations = validate_program(p, schemas_of(ts.tables), ts.action);
  if (!violations.empty()) {
    std::string msg;
    for (const auto& v : violations) msg += (msg.empty() ? "" : "\n") + v.to_string();
    throw ValidityError(msg);
  }
  return p;
}

int cmd_exec(const std::string& program_path, const std::string& tables_path, bool pending) {
  TableSet ts = load_tables(tables_path, pending);
  Program p = load_valid_program(program_path, ts);
  std::cout << table_to_json(exec_program(p, ts.tables, ts.action)).dump(2) << "\n";
  return kExitSolved;
}

int cmd_validate(const std::string& program_path, const std::string& tables_path) {
  TableSet ts = load_tables(tables_path, false);
  std::cout << format_program(load_valid_program(program_path, ts));
  return kExitSolved;
}

int cmd_bench(const std::string& dir, const SettingsFlags& flags, int jobs, const std::string& report_path) {
  auto files = benchmark_files(dir);
  std::vector<RunReport> reports;
  bool regression_failed = false;
  for (auto mode : flags.modes()) {
    reports.push_back(run_bench(files, flags.settings(mode), jobs));
    std::cerr << render_report(reports.back());
    if (mode != SearchMode::Bidirectional) continue;
    for (const auto& c : reports.back().cases) {
      if (c.regression && !c.passes()) {
        regression_failed = true;
        std::cerr << "regression: " << c.id << " " << c.outcome << (c.overfit ? " (over-fitting)" : "")
                  << (c.reference_ok == false ? " (reference program broken)" : "") << "\n";
      }
    }
  }
  // Load errors always fail the run: they hide cases.
  for (const auto& r : reports) {
    for (const auto& c : r.cases) {
      if (c.load_failed) regression_failed = true;
    }
  }
  const std::string text = reports_to_json(reports).dump(2) + "\n";
  if (report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(report_path);
    if (!out) throw ParseError("cannot write '" + report_path + "'");
    out << text;
  }
  return regression_failed ? kExitError : kExitSolved;
}

int cmd_domains() {
  json arr = json::array();
  for (const auto& d : builtin_domains()) arr.push_back(domain_to_json(d));
  std::cout << arr.dump(2) << "\n";
  return kExitSolved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bee: programming-by-example synthesis of table transformations"};
  app.require_subcommand(1);

  SettingsFlags synth_flags;
  std::string synth_path;
  bool synth_check = false;
  auto* synth = app.add_subcommand("synth", "Synthesize a program for a benchmark case");
  synth->add_option("benchmark", synth_path, "Benchmark JSON file")->required()->check(CLI::ExistingFile);
  synth->add_flag("--check-overfit", synth_check, "Also run the program on the pending data");
  synth_flags.add_to(synth, false);

  std::string exec_program_path, exec_tables;
  bool exec_pending = false;
  auto* exec = app.add_subcommand("exec", "Run a program on tables and print the action table");
  exec->add_option("program", exec_program_path, "Program text file")->required()->check(CLI::ExistingFile);
  exec->add_option("tables", exec_tables, "Benchmark file or {action, tables} JSON")
      ->required()
      ->check(CLI::ExistingFile);
  exec->add_flag("--pending", exec_pending, "Use the benchmark's pending tables");

  std::string val_program, val_tables;
  auto* validate = app.add_subcommand("validate", "Check a program and print it in canonical form");
  validate->add_option("program", val_program, "Program text file")->required()->check(CLI::ExistingFile);
  validate->add_option("tables", val_tables, "Benchmark file or {action, tables} JSON")
      ->required()
      ->check(CLI::ExistingFile);

  SettingsFlags bench_flags;
  std::string bench_dir, bench_report;
  int bench_jobs = 1;
  auto* bench = app.add_subcommand("bench", "Run every benchmark under a directory");
  bench->add_option("dir", bench_dir, "Benchmark directory")->required()->check(CLI::ExistingDirectory);
  bench->add_option("--jobs", bench_jobs, "Parallel workers")->envname("BEE_JOBS")->check(CLI::PositiveNumber);
  bench->add_option("--report", bench_report, "Write the JSON report here instead of standard output");
  bench_flags.add_to(bench, true);

  auto* domains = app.add_subcommand("domains", "Print the built-in domain definitions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), kExitError);
  }

  try {
    if (*synth) return cmd_synth(synth_path, synth_flags, synth_check);
    if (*exec) return cmd_exec(exec_program_path, exec_tables, exec_pending);
    if (*validate) return cmd_validate(val_program, val_tables);
    if (*bench) return cmd_bench(bench_dir, bench_flags, bench_jobs, bench_report);
    if (*domains) return cmd_domains();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
