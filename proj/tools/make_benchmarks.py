#!/usr/bin/env python3
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

"""Writes the benchmark corpus under benchmarks/.

Each task states its intent as a plain Python function. That function
produces both the example output and the expected output on pending data,
independently of the engine. Reference programs are written by hand.
"""

import datetime
import json
import pathlib
import posixpath
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent / "benchmarks"


def ident(label):
    return {"id": label}


def table(name, columns, rows):
    return {"name": name, "columns": [{"name": n, "type": t} for n, t in columns], "rows": rows}


def action_table(name, args, rows):
    return table(name, [("action", "Str")] + args, [[name] + r for r in rows])


def write(domain_dir, case):
    path = ROOT / domain_dir / f"{case['id']}.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(case, indent=1) + "\n")
    return path


# --- running example ---------------------------------------------------------

FRAMES_DOMAIN = {
    "name": "frames",
    "entities": [{"name": "frames", "fields": [
        {"name": "file", "type": "Str"}, {"name": "frame", "type": "Int"}, {"name": "id", "type": "Id"}]}],
    "actions": [{"name": "shift", "args": [
        {"name": "id", "type": "Id"}, {"name": "channel", "type": "Str"},
        {"name": "bx", "type": "Int"}, {"name": "by", "type": "Int"}]}],
}
FRAME_COLS = [("file", "Str"), ("frame", "Int"), ("id", "Id")]
SHIFT_ARGS = [("id", "Id"), ("channel", "Str"), ("bx", "Int"), ("by", "Int")]


def frames(lo, hi):
    return table("ti", FRAME_COLS, [["tiktok.jpg", f, ident(f"f{f}")] for f in range(lo, hi + 1)])


def shift_intent(lo, hi):
    # Odd frames shift left, even frames right, 10 more every second frame.
    rows = []
    for f in range(lo, hi + 1):
        mag = 10 * ((f + 1) // 2) + 20
        v = -mag if f % 2 else mag
        rows.append([ident(f"f{f}"), "GB", v, v])
    return action_table("shift", SHIFT_ARGS, rows)


SHIFT_PROGRAM = """t1 = Filter(ti, isOdd(frame));
t2 = Filter(ti, isEven(frame));
Yield("shift", t1, id, "GB", linear(-5,-25)(frame), linear(-5,-25)(frame));
Yield("shift", t2, id, "GB", linear(5,20)(frame), linear(5,20)(frame));
"""


def running_cases():
    out = [{
        "id": "shift_frames",
        "domain": FRAMES_DOMAIN,
        "description": "Shift the green-blue channel of frames 1-4; continue the alternating pattern.",
        "inputs": [frames(1, 4)],
        "output": shift_intent(1, 4),
        "constants": [],
        "pending": [frames(5, 8)],
        "expected": shift_intent(5, 8),
        "reference_program": SHIFT_PROGRAM,
        "regression": True,
    }]
    for k in (10, 20):
        out.append({
            "id": f"shift_frames_k{k}",
            "domain": FRAMES_DOMAIN,
            "description": f"The running example with {k} demonstrated frames.",
            "inputs": [frames(1, k)],
            "output": shift_intent(1, k),
            "constants": [],
            "pending": [frames(k + 1, k + 4)],
            "expected": shift_intent(k + 1, k + 4),
            "reference_program": SHIFT_PROGRAM,
            "regression": True,
        })
    return out


# --- spreadsheet ---------------------------------------------------------------

FILL_ARGS = [("content", "Str"), ("row", "Int"), ("col", "Int")]


def sheet(rows, second="Int"):
    return table("sheet", [("row", "Int"), ("col1", "Str"), ("col2", second)],
                 [[i + 1, a, b] for i, (a, b) in enumerate(rows)])


def pass_fail_intent(rows):
    return action_table("fill", FILL_ARGS,
                        [["Pass" if s >= 60 else "Fail", i + 1, 3] for i, (_, s) in enumerate(rows)])


def order_intent(rows):
    # Names listed in column 4 by descending score.
    ranked = sorted(rows, key=lambda r: -r[1])
    return action_table("fill", FILL_ARGS, [[name, ranked.index((name, s)) + 1, 4] for name, s in rows])


def swap_name_intent(rows):
    out = []
    for i, (name, _) in enumerate(rows):
        last, first = name.split(", ")
        out.append([f"{first} {last}", i + 1, 3])
    return action_table("fill", FILL_ARGS, out)


def spreadsheet_cases():
    scores = [("Alice", 85), ("Bob", 42), ("Carol", 60), ("Dave", 73), ("Erin", 59)]
    pend_scores = [("Frank", 59), ("Grace", 60), ("Heidi", 100)]
    ranked = [("Ann", 91), ("Ben", 67), ("Cid", 78), ("Dot", 55)]
    pend_ranked = [("Eve", 12), ("Fay", 99), ("Gus", 40)]
    names = [("Smith, John", "x"), ("Lee, Ann", "y"), ("Garcia, Maria", "z")]
    pend_names = [("Brown, Tom", "q"), ("Nguyen, Linh", "r")]
    return [
        {
            "id": "pass_fail",
            "domain": "spreadsheet",
            "description": "Write Pass into column 3 for scores of at least 60, Fail otherwise.",
            "inputs": [sheet(scores)],
            "output": pass_fail_intent(scores),
            "constants": [60],
            "pending": [sheet(pend_scores)],
            "expected": pass_fail_intent(pend_scores),
            "reference_program": "t1 = Filter(sheet, intGeq(col2, 60));\n"
                                 "t2 = Filter(sheet, intLt(col2, 60));\n"
                                 "Yield(\"fill\", t1, \"Pass\", row, 3);\n"
                                 "Yield(\"fill\", t2, \"Fail\", row, 3);\n",
            "regression": True,
        },
        {
            "id": "rank_by_score",
            "domain": "spreadsheet",
            "description": "List the names in column 4, highest score first.",
            "inputs": [sheet(ranked)],
            "output": order_intent(ranked),
            "constants": [],
            "pending": [sheet(pend_ranked)],
            "expected": order_intent(pend_ranked),
            "reference_program": "t1 = Order(sheet, col2, 1, true);\n"
                                 "Yield(\"fill\", t1, col1, ord_col2, 4);\n",
            "regression": True,
        },
        {
            "id": "swap_names",
            "domain": "spreadsheet",
            "description": "Turn 'Last, First' in column 1 into 'First Last' in column 3.",
            "inputs": [sheet(names, "Str")],
            "output": swap_name_intent(names),
            "constants": [],
            "pending": [sheet(pend_names, "Str")],
            "expected": swap_name_intent(pend_names),
            "reference_program": None,
            "regression": True,
        },
    ]


# --- file management -----------------------------------------------------------

FILE_COLS = [("id", "Id"), ("basename", "Str"), ("extension", "Str"), ("path", "Str"), ("size", "Int"),
             ("modification_time", "Int"), ("readable", "Int"), ("writable", "Int"), ("executable", "Int"),
             ("group", "Str"), ("year", "Int"), ("month", "Int"), ("day", "Int"), ("year_s", "Str"),
             ("month_s", "Str"), ("day_s", "Str")]


def file_row(fid, file_path, size, mtime, r, w, x, group):
    stem, ext = posixpath.splitext(posixpath.basename(file_path))
    d = datetime.datetime.fromtimestamp(mtime, datetime.timezone.utc)
    return [ident(fid), stem, ext[1:], posixpath.dirname(file_path), size, mtime, int(r), int(w), int(x), group,
            d.year, d.month, d.day, str(d.year), f"{d.month:02d}", f"{d.day:02d}"]


def files(specs):
    return table("files", FILE_COLS, [file_row(*s) for s in specs])


DAY = 86400
T0 = 1_700_000_000  # 2023-11-14

FILES_A = [
    ("a1", "/home/u/report.pdf", 120_000, T0, 1, 1, 0, "staff"),
    ("a2", "/home/u/build.sh", 2_000, T0 + 35 * DAY, 1, 1, 1, "dev"),
    ("a3", "/home/u/photo.jpg", 3_500_000, T0 + 61 * DAY, 1, 0, 0, "staff"),
    ("a4", "/home/u/notes.txt", 800, T0 + 95 * DAY, 1, 1, 0, "staff"),
    ("a5", "/home/u/paper.pdf", 2_400_000, T0 + 160 * DAY, 1, 1, 0, "dev"),
    ("a6", "/home/u/run.sh", 1_200, T0 + 230 * DAY, 1, 1, 1, "staff"),
    ("a7", "/home/u/movie.mp4", 8_100_000, T0 + 300 * DAY, 1, 1, 0, "media"),
    ("a8", "/home/u/thesis.pdf", 640_000, T0 + 420 * DAY, 1, 0, 0, "media"),
]
FILES_B = [
    ("b1", "/srv/x/slides.pdf", 5_000_000, T0 + 15 * DAY, 1, 1, 0, "dev"),
    ("b2", "/srv/x/setup.sh", 900, T0 + 80 * DAY, 1, 1, 1, "ops"),
    ("b3", "/srv/x/todo.txt", 300, T0 + 130 * DAY, 1, 1, 0, "ops"),
    ("b4", "/srv/x/clip.jpg", 9_000_000, T0 + 190 * DAY, 1, 1, 0, "ops"),
    ("b5", "/srv/x/deploy.sh", 4_100, T0 + 250 * DAY, 1, 1, 1, "dev"),
    ("b6", "/srv/x/manual.pdf", 700_000, T0 + 340 * DAY, 1, 1, 0, "ops"),
    ("b7", "/srv/x/song.mp3", 1_000_001, T0 + 500 * DAY, 1, 0, 0, "media"),
    ("b8", "/srv/x/data.csv", 1_000_000, T0 + 610 * DAY, 1, 1, 0, "media"),
    ("b9", "/srv/x/intro.txt", 50, T0 + 700 * DAY, 0, 0, 0, "dev"),
]


def file_rows(specs):
    return {s[0]: dict(zip([c for c, _ in FILE_COLS], file_row(*s))) for s in specs}


def move_pdf_intent(specs):
    return action_table("move", [("id", "Id"), ("path", "Str")],
                        [[ident(k), "/docs"] for k, r in file_rows(specs).items() if r["extension"] == "pdf"])


def chmod_exec_intent(specs):
    return action_table("chmod", [("id", "Id"), ("mod", "Str")],
                        [[ident(k), "755"] for k, r in file_rows(specs).items() if r["executable"] == 1])


def dated_name_intent(specs):
    return action_table("rename", [("id", "Id"), ("name", "Str")],
                        [[ident(k), f"{r['year_s']}_{r['basename']}.{r['extension']}"]
                         for k, r in file_rows(specs).items()])


def delete_large_intent(specs):
    return action_table("delete", [("id", "Id")],
                        [[ident(k)] for k, r in file_rows(specs).items() if r["size"] > 1_000_000])


def keep_largest_intent(specs):
    rows = file_rows(specs)
    biggest = {}
    for r in rows.values():
        biggest[r["group"]] = max(biggest.get(r["group"], 0), r["size"])
    return action_table("delete", [("id", "Id")],
                        [[ident(k)] for k, r in rows.items() if r["size"] < biggest[r["group"]]])


def file_case(cid, description, intent, constants, reference, examples=None, regression=True):
    examples = examples or FILES_A
    return {
        "id": cid,
        "domain": "file",
        "description": description,
        "inputs": [files(examples)],
        "output": intent(examples),
        "constants": constants,
        "pending": [files(FILES_B)],
        "expected": intent(FILES_B),
        "reference_program": reference,
        "regression": regression,
    }


# More demonstrations for the group task; with FILES_A alone a few
# coincidental filters cover the deletions and the program over-fits.
FILES_A_MORE = FILES_A + [
    ("a9", "/home/u/budget.xls", 45_000, T0 + 11 * DAY, 1, 1, 0, "dev"),
    ("a10", "/home/u/logo.png", 99_000, T0 + 77 * DAY, 1, 1, 0, "media"),
    ("a11", "/home/u/cron.sh", 600, T0 + 145 * DAY, 1, 1, 1, "ops"),
    ("a12", "/home/u/dump.sql", 7_700_000, T0 + 199 * DAY, 1, 1, 0, "ops"),
    ("a13", "/home/u/todo.md", 1_500, T0 + 260 * DAY, 1, 1, 0, "staff"),
    ("a14", "/home/u/backup.tar", 6_600_000, T0 + 333 * DAY, 1, 0, 0, "ops"),
]

KEEP_LARGEST = ("t1 = GroupJoin(files, group, (max, size));\n"
                "t2 = Filter(t1, intLt(size, max_size));\n"
                "Yield(\"delete\", t2, id);\n")


def file_cases():
    return [
        file_case("move_pdfs", "Move every PDF to /docs.", move_pdf_intent, ["pdf"],
                  "t1 = Filter(files, strEq(extension, \"pdf\"));\nYield(\"move\", t1, id, \"/docs\");\n"),
        file_case("chmod_scripts", "Make executable files mode 755.", chmod_exec_intent, [1],
                  "t1 = Filter(files, intEq(executable, 1));\nYield(\"chmod\", t1, id, \"755\");\n"),
        file_case("date_prefix", "Prefix each file name with its modification year.", dated_name_intent, [],
                  None),
        file_case("delete_large", "Delete files larger than 1 MB.", delete_large_intent, [1_000_000],
                  "t1 = Filter(files, intGt(size, 1000000));\nYield(\"delete\", t1, id);\n"),
        file_case("keep_largest_few_examples", "In each group, delete all but the largest file (few examples).",
                  keep_largest_intent, [], KEEP_LARGEST, regression=False),
        file_case("keep_largest_per_group", "In each group, delete all but the largest file.",
                  keep_largest_intent, [], KEEP_LARGEST, examples=FILES_A_MORE),
    ]


# --- XML ---------------------------------------------------------------------------

ELEM_COLS = [("id", "Id"), ("tag", "Str"), ("text", "Str"), ("parent", "Id"), ("previous", "Id"), ("next", "Id")]
ATTR_COLS = [("id", "Id"), ("element", "Id"), ("key", "Str"), ("value", "Str")]
NULL = ident("null")


def elements(prefix, specs):
    # specs: (tag, text) children of one root, in document order.
    rows = [[ident(f"{prefix}0"), "body", "", NULL, NULL, NULL]]
    for i, (tag, text) in enumerate(specs, start=1):
        prev = ident(f"{prefix}{i - 1}") if i > 1 else NULL
        nxt = ident(f"{prefix}{i + 1}") if i < len(specs) else NULL
        rows.append([ident(f"{prefix}{i}"), tag, text, ident(f"{prefix}0"), prev, nxt])
    return table("elements", ELEM_COLS, rows)


def attributes(prefix, specs):
    return table("attributes", ATTR_COLS,
                 [[ident(f"{prefix}a{i}"), ident(f"{prefix}{e}"), k, v] for i, (e, k, v) in enumerate(specs)])


DOC_A = [("b", "Note"), ("p", "Hello"), ("img", ""), ("b", "Warning"), ("p", "Bye"), ("img", "")]
ATTR_A = [(3, "src", "cat.png"), (6, "src", "dog.png"), (2, "class", "intro"), (3, "width", "40")]
DOC_B = [("p", "Intro"), ("b", "Alert"), ("img", ""), ("b", "Tip")]
ATTR_B = [(3, "src", "bird.png"), (1, "class", "lead")]


def retag_intent(prefix, doc):
    return action_table("modify_tag", [("element", "Id"), ("tag", "Str")],
                        [[ident(f"{prefix}{i}"), "strong"] for i, (t, _) in enumerate(doc, 1) if t == "b"])


def alt_intent(prefix, attrs):
    return action_table("add_attribute", [("element", "Id"), ("key", "Str"), ("value", "Str")],
                        [[ident(f"{prefix}{e}"), "alt", v.split(".")[0]] for e, k, v in attrs if k == "src"])


def drop_images_intent(prefix, doc):
    return action_table("delete_element", [("element", "Id")],
                        [[ident(f"{prefix}{i}")] for i, (t, _) in enumerate(doc, 1) if t == "img"])


def xml_case(cid, description, output, expected, constants, reference):
    return {
        "id": cid,
        "domain": "xml",
        "description": description,
        "inputs": [elements("e", DOC_A), attributes("e", ATTR_A)],
        "output": output,
        "constants": constants,
        "pending": [elements("e", DOC_B), attributes("e", ATTR_B)],
        "expected": expected,
        "reference_program": reference,
        "regression": True,
    }


def xml_cases():
    return [
        xml_case("bold_to_strong", "Rename every <b> element to <strong>.", retag_intent("e", DOC_A),
                 retag_intent("e", DOC_B), ["b"],
                 "t1 = Filter(elements, strEq(tag, \"b\"));\nYield(\"modify_tag\", t1, id, \"strong\");\n"),
        xml_case("alt_from_src", "Give every image an alt text taken from its file name.", alt_intent("e", ATTR_A),
                 alt_intent("e", ATTR_B), ["src"], None),
        xml_case("drop_images", "Delete all <img> elements.", drop_images_intent("e", DOC_A),
                 drop_images_intent("e", DOC_B), ["img"],
                 "t1 = Filter(elements, strEq(tag, \"img\"));\nYield(\"delete_element\", t1, id);\n"),
    ]


def main():
    written = []
    for domain, cases in (("running", running_cases()), ("spreadsheet", spreadsheet_cases()),
                          ("file", file_cases()), ("xml", xml_cases())):
        for case in cases:
            if case.get("reference_program") is None:
                case.pop("reference_program", None)
            written.append(write(domain, case))
    for p in written:
        print(p.relative_to(ROOT.parent))
    return 0


if __name__ == "__main__":
    sys.exit(main())
