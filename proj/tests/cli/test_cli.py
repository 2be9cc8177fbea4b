# Copyright 2026 The Bee Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================

"""End-to-end checks of the bee command-line tool."""

import json
import os
import shutil
import subprocess
from pathlib import Path

import jsonschema
import pytest

BEE = os.environ.get("BEE_BIN", "build/bee")
ROOT = Path(os.environ.get("BEE_SOURCE_DIR", Path(__file__).resolve().parents[2]))
BENCH = ROOT / "benchmarks"
RUNNING = BENCH / "running" / "shift_frames.json"
SHIFT_PROG = BENCH / "running" / "shift_frames.prog"
SCHEMA = json.loads((ROOT / "schemas" / "run_report.schema.json").read_text())


def bee(*args, env=None, timeout=600):
    full_env = dict(os.environ)
    for key in list(full_env):
        if key.startswith("BEE_") and key not in ("BEE_BIN", "BEE_SOURCE_DIR"):
            del full_env[key]
    full_env.update(env or {})
    return subprocess.run([BEE, *map(str, args)], capture_output=True, text=True, env=full_env, timeout=timeout)


def rows(table_json):
    return sorted(json.dumps(r, sort_keys=True) for r in table_json["rows"])


def test_synth_running_example():
    r = bee("synth", RUNNING)
    assert r.returncode == 0, r.stderr
    assert r.stdout == (
        "t1 = Filter(ti, isOdd(frame));\n"
        "t2 = Filter(ti, isEven(frame));\n"
        'Yield("shift", t1, id, "GB", linear(-5,-25)(frame), linear(-5,-25)(frame));\n'
        'Yield("shift", t2, id, "GB", linear(5,20)(frame), linear(5,20)(frame));\n'
    )
    stats = json.loads(r.stderr.strip().splitlines()[-1])
    assert set(stats) >= {"elapsed_ms", "forward_tables", "hypotheses_tried", "matches_solved", "mode"}
    assert stats["mode"] == "bi"
    assert stats["outcome"] == "solved"


def test_synth_then_exec_reproduces_output(tmp_path):
    for case in sorted(BENCH.rglob("*.json")):
        r = bee("synth", case)
        if r.returncode != 0:
            continue
        prog = tmp_path / (case.stem + ".prog")
        prog.write_text(r.stdout)
        e = bee("exec", prog, case)
        assert e.returncode == 0, e.stderr
        got, want = json.loads(e.stdout), json.loads(case.read_text())["output"]
        assert got["columns"] == want["columns"], case.name
        assert rows(got) == rows(want), case.name


def test_synth_check_overfit_flag():
    r = bee("synth", RUNNING, "--check-overfit")
    assert r.returncode == 0
    assert json.loads(r.stderr.strip().splitlines()[-1])["overfit"] is False


def test_synth_timeout_exit_code():
    r = bee("synth", BENCH / "file" / "keep_largest_per_group.json", "--timeout", "1ms")
    assert r.returncode == 2, r.stderr
    assert r.stdout == ""
    assert json.loads(r.stderr.strip().splitlines()[-1])["outcome"] == "timeout"


def test_timeout_from_environment():
    r = bee("synth", BENCH / "file" / "keep_largest_per_group.json", env={"BEE_TIMEOUT": "1ms"})
    assert r.returncode == 2


def test_synth_exhausted_exit_code(tmp_path):
    case = json.loads(RUNNING.read_text())
    case["output"]["rows"] = [["shift", {"id": "nowhere"}, "GB", 1, 1]]
    case.pop("reference_program", None)
    path = tmp_path / "impossible.json"
    path.write_text(json.dumps(case))
    r = bee("synth", path, "--max-depth", "1")
    assert r.returncode == 3
    assert json.loads(r.stderr.strip().splitlines()[-1])["outcome"] == "exhausted"


def test_synth_data_errors(tmp_path):
    assert bee("synth", tmp_path / "missing.json").returncode == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    r = bee("synth", bad)
    assert r.returncode == 1
    assert "error" in r.stderr
    assert bee("synth", RUNNING, "--mode", "both").returncode == 1
    assert bee("synth", RUNNING, "--timeout", "soon").returncode == 1


def test_exec_shipped_program():
    e = bee("exec", SHIFT_PROG, RUNNING)
    assert e.returncode == 0, e.stderr
    assert rows(json.loads(e.stdout)) == rows(json.loads(RUNNING.read_text())["output"])

    p = bee("exec", SHIFT_PROG, RUNNING, "--pending")
    assert p.returncode == 0, p.stderr
    out = json.loads(p.stdout)
    got = {r[1]["id"]: (r[3], r[4]) for r in out["rows"]}
    assert got == {"f5": (-50, -50), "f6": (50, 50), "f7": (-60, -60), "f8": (60, 60)}


def test_exec_with_explicit_tables(tmp_path):
    case = json.loads(RUNNING.read_text())
    tables = {
        "action": {"name": "shift", "args": case["output"]["columns"][1:]},
        "tables": case["pending"],
    }
    path = tmp_path / "tables.json"
    path.write_text(json.dumps(tables))
    e = bee("exec", SHIFT_PROG, path)
    assert e.returncode == 0, e.stderr
    assert rows(json.loads(e.stdout)) == rows(case["expected"])


def test_exec_invalid_program_names_rule(tmp_path):
    prog = tmp_path / "bad.prog"
    prog.write_text('j = Join(ti, ti, frame, frame);\nYield("shift", j, id, "GB", 1, 1);\n')
    r = bee("exec", prog, RUNNING)
    assert r.returncode == 1
    assert "rule: Id-typed join" in r.stderr

    unparsable = tmp_path / "junk.prog"
    unparsable.write_text("u = Filter(ti, ")
    assert bee("exec", unparsable, RUNNING).returncode == 1


def test_validate_prints_canonical_form(tmp_path):
    prog = tmp_path / "spaced.prog"
    prog.write_text(SHIFT_PROG.read_text().replace(", ", " ,  ").replace(";", " ;"))
    r = bee("validate", prog, RUNNING)
    assert r.returncode == 0, r.stderr
    assert r.stdout == SHIFT_PROG.read_text()

    wrong = tmp_path / "wrong.prog"
    wrong.write_text('Yield("shift", ti, id, "GB", file, 1);\n')
    r = bee("validate", wrong, RUNNING)
    assert r.returncode == 1
    assert "rule: argument type" in r.stderr


def test_bench_report_schema_and_modes(tmp_path):
    small = tmp_path / "bench"
    (small / "running").mkdir(parents=True)
    (small / "spreadsheet").mkdir()
    shutil.copy(RUNNING, small / "running")
    shutil.copy(BENCH / "spreadsheet" / "pass_fail.json", small / "spreadsheet")
    report = tmp_path / "report.json"
    r = bee("bench", small, "--mode", "both", "--report", report, "--jobs", "2")
    assert r.returncode == 0, r.stderr
    doc = json.loads(report.read_text())
    jsonschema.validate(doc, SCHEMA)
    assert [rep["mode"] for rep in doc["reports"]] == ["bi", "forward-only"]
    bi, fo = doc["reports"]
    assert [c["id"] for c in bi["cases"]] == sorted(c["id"] for c in bi["cases"])
    solved_bi = {c["id"] for c in bi["cases"] if c["outcome"] == "solved"}
    solved_fo = {c["id"] for c in fo["cases"] if c["outcome"] == "solved"}
    assert solved_bi >= solved_fo
    assert bi["aggregate"]["success_rate"] == 1.0
    assert "solved 2/2" in r.stderr


def test_bench_empty_directory(tmp_path):
    r = bee("bench", tmp_path)
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, SCHEMA)
    assert doc["reports"][0]["cases"] == []


def test_bench_fails_on_regression(tmp_path):
    shutil.copy(BENCH / "file" / "keep_largest_per_group.json", tmp_path)
    r = bee("bench", tmp_path, "--timeout", "1ms")
    assert r.returncode == 1
    assert "regression: keep_largest_per_group timeout" in r.stderr
    jsonschema.validate(json.loads(r.stdout), SCHEMA)


def test_bench_fails_on_unreadable_case(tmp_path):
    (tmp_path / "broken.json").write_text("[]")
    r = bee("bench", tmp_path)
    assert r.returncode == 1
    doc = json.loads(r.stdout)
    assert doc["reports"][0]["cases"][0]["outcome"] == "error"


def test_bench_shipped_corpus():
    r = bee("bench", BENCH, "--jobs", "2")
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, SCHEMA)
    for case in doc["reports"][0]["cases"]:
        if case["regression"]:
            assert case["outcome"] == "solved" and not case["overfit"], case["id"]
        if case["reference_ok"] is not None:
            assert case["reference_ok"], case["id"]


def test_domains_command():
    r = bee("domains")
    assert r.returncode == 0
    names = [d["name"] for d in json.loads(r.stdout)]
    assert names == ["file", "spreadsheet", "xml"]


@pytest.mark.parametrize("args", [[], ["frobnicate"], ["synth"]])
def test_usage_errors(args):
    assert bee(*args).returncode != 0
