# SPDX-License-Identifier: MIT
# Copyright (c) 2025-2026 alfkit contributors

"""Tests for the alfkit command line, driven through cli.main(argv).

Stdlib unittest only. Run from the repo root with:

    python -m unittest tests.test_cli

Golden outputs live in tests/golden/ and are compared byte for byte.
"""

import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from unittest import mock

import cli
import spin_oracle
from surface_model import InternalInconsistencyError

GOLDEN = Path(__file__).parent / "golden"


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main(list(argv))
    return code, out.getvalue(), err.getvalue()


def _golden(name):
    return (GOLDEN / name).read_text(encoding="utf-8")


class GoldenOutputTests(unittest.TestCase):
    def test_classify_worked_example(self):
        code, out, _ = _run("classify", "--genus", "2", "--word", "b1 c1 b2", "--json")
        self.assertEqual(code, 0)
        self.assertEqual(out, _golden("classify_b1c1b2_g2.json"))

    def test_invariants_of_the_identity(self):
        code, out, _ = _run("invariants", "--genus", "2", "--word", "id")
        self.assertEqual(code, 0)
        self.assertEqual(out, _golden("invariants_id_g2.json"))

    def test_spin_of_the_double(self):
        code, out, _ = _run("spin", "--genus", "2", "--word", "b1 c1 b2", "--double")
        self.assertEqual(code, 0)
        self.assertEqual(out, _golden("spin_b1c1b2_double.json"))

    def test_output_is_deterministic(self):
        argv = ("classify", "--genus", "3", "--word", "a1 s2^-1 c2", "--json")
        self.assertEqual(_run(*argv), _run(*argv))


class CommandTests(unittest.TestCase):
    def test_classify_text(self):
        code, out, _ = _run("classify", "--genus", "2", "--word", "a1 c1 b1")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("LF(Sigma_{2,1}, a1 c1 b1): 3 critical points\n"))
        self.assertIn("D^6: embeds [Theorem 1.3(2)]", out)

    def test_spin_closed(self):
        code, out, _ = _run("spin", "--genus", "3", "--word", "a1 s2", "--closed")
        self.assertEqual(code, 0)
        self.assertEqual(
            json.loads(out),
            {"spin": False, "witness": {"subset": [], "target": 2}, "method": "both"},
        )

    def test_spin_honours_the_brute_force_bound(self):
        with mock.patch.object(spin_oracle, "BRUTE_FORCE_BOUND", 2):
            _, out, _ = _run("spin", "--genus", "2", "--word", "b1 c1 b2", "--double")
        self.assertEqual(json.loads(out)["method"], "linear")

    def test_invariants_with_torsion(self):
        code, out, _ = _run("invariants", "--genus", "1", "--word", "a1 b1 a1 b1 a1 b1")
        self.assertEqual(code, 0)
        payload = json.loads(out)
        self.assertEqual(payload["word"], "a1 b1 a1 b1 a1 b1")
        self.assertEqual(payload["euler_characteristic"], 5)
        self.assertEqual(payload["total_space_h1"]["group"], "0")
        self.assertEqual(payload["boundary_h1"], {"free_rank": 0, "torsion": [2, 2], "group": "Z/2 + Z/2"})

    def test_action(self):
        code, out, _ = _run("action", "--genus", "1", "--word", "a1 b1")
        self.assertEqual(code, 0)
        self.assertEqual(
            out,
            '{"genus": 1, "boundary": 1, "word": "a1 b1", "matrix": [[1, -1], [1, 0]], "preserves_form": true}\n',
        )

    def test_clean(self):
        code, out, _ = _run("clean", "--genus", "1", "--class", "0,1")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out), {"genus": 1, "class": [0, 1], "word": "a1 b1", "image": [1, 0]})

    def test_clean_rejects_bad_classes(self):
        for csv in ("0,x", "1,0,1"):
            code, out, err = _run("clean", "--genus", "1", "--class", csv)
            self.assertEqual(code, 1, csv)
            self.assertEqual(out, "")
            self.assertTrue(err.startswith("error: "))


class ExitCodeTests(unittest.TestCase):
    def test_unknown_curve_is_an_input_error(self):
        code, out, err = _run("classify", "--genus", "1", "--word", "a1 b2")
        self.assertEqual(code, 1)
        self.assertEqual(out, "")
        self.assertIn("b2 needs genus >= 2 at 3..5", err)

    def test_syntax_error(self):
        code, _, err = _run("classify", "--genus", "2", "--word", "a1^0")
        self.assertEqual(code, 1)
        self.assertIn("exponent 0", err)

    def test_bad_genus(self):
        code, _, _ = _run("invariants", "--genus", "-1", "--word", "id")
        self.assertEqual(code, 1)

    def test_usage_errors(self):
        for argv in (
            ["classify", "--genus", "2"],
            ["frobnicate"],
            ["spin", "--genus", "2", "--word", "a1"],
            ["classify", "--genus", "two", "--word", "a1"],
        ):
            code, out, err = _run(*argv)
            self.assertEqual(code, 1, argv)
            self.assertTrue(err.startswith("error: alfkit"), err)

    def test_help_exits_cleanly(self):
        code, out, _ = _run("--help")
        self.assertEqual(code, 0)
        self.assertIn("classify", out)

    def test_internal_inconsistency_exits_two(self):
        with mock.patch.object(cli, "classify", side_effect=InternalInconsistencyError("oracles disagree")):
            code, out, err = _run("classify", "--genus", "2", "--word", "a1")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn("internal inconsistency: oracles disagree", err)

    def test_unexpected_failure_exits_two(self):
        with mock.patch.object(cli, "classify", side_effect=KeyError("boom")):
            code, _, err = _run("classify", "--genus", "2", "--word", "a1")
        self.assertEqual(code, 2)
        self.assertIn("[ERROR] unexpected failure", err)


class BatchTests(unittest.TestCase):
    LINES = [
        json.dumps(
            {
                "genus": 2,
                "boundary": 1,
                "word": [
                    {"curve": "b1", "chirality": 1},
                    {"curve": "c1", "chirality": 1},
                    {"curve": "b2", "chirality": 1},
                ],
            }
        ),
        "not json",
        json.dumps({"genus": 1, "boundary": 1, "word": "a1 b2"}),
        json.dumps({"genus": 2, "boundary": 1, "word": "a1 c1 b1"}),
        json.dumps({"genus": 2, "word": []}),
    ]

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tmp.name, "alfs.jsonl")
        with open(self.path, "w", encoding="utf-8") as handle:
            handle.write("\n".join(self.LINES) + "\n")

    def tearDown(self):
        self.tmp.cleanup()

    def test_one_output_line_per_input_line(self):
        code, out, _ = _run("batch", "--file", self.path)
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(len(lines), 5)
        self.assertEqual(lines[0] + "\n", _golden("classify_b1c1b2_g2.json"))
        self.assertEqual(json.loads(lines[1])["line"], 2)
        self.assertIn("not a JSON object", json.loads(lines[1])["error"])
        self.assertEqual(json.loads(lines[2]), {"line": 3, "error": "b2 needs genus >= 2 at 3..5"})
        self.assertEqual(json.loads(lines[3])["d6"], "embeds")
        self.assertEqual(json.loads(lines[4]), {"line": 5, "error": "ALF object is missing boundary"})

    def test_parallel_run_keeps_the_order(self):
        _, serial, _ = _run("batch", "--file", self.path)
        code, parallel, _ = _run("batch", "--file", self.path, "--jobs", "2")
        self.assertEqual(code, 0)
        self.assertEqual(parallel, serial)

    def _write(self, lines):
        with open(self.path, "w", encoding="utf-8") as handle:
            handle.write("\n".join(lines) + "\n")

    def test_deeply_nested_line_stays_in_place(self):
        self._write([self.LINES[0], "[" * 100000, self.LINES[3]])
        for jobs in ("1", "2"):
            code, out, _ = _run("batch", "--file", self.path, "--jobs", jobs)
            self.assertEqual(code, 0, jobs)
            lines = out.splitlines()
            self.assertEqual(len(lines), 3, jobs)
            self.assertEqual(lines[0] + "\n", _golden("classify_b1c1b2_g2.json"))
            self.assertEqual(
                json.loads(lines[1]), {"line": 2, "error": "not a JSON object: nesting too deep"}
            )
            self.assertEqual(json.loads(lines[2])["d6"], "embeds")

    def test_unexpected_failure_on_a_line_is_reported_in_place(self):
        with mock.patch.object(cli, "classify", side_effect=KeyError("boom")):
            code, out, err = _run("batch", "--file", self.path)
        self.assertEqual(code, 2)
        lines = [json.loads(line) for line in out.splitlines()]
        self.assertEqual([line["line"] for line in lines], [1, 2, 3, 4, 5])
        self.assertEqual(lines[0]["error"], "internal failure (KeyError)")
        self.assertEqual(lines[3]["error"], "internal failure (KeyError)")
        self.assertIn("not a JSON object", lines[1]["error"])
        self.assertIn("[ERROR] batch line 1: KeyError", err)
        self.assertIn("internal failure on at least one batch line", err)

    def test_missing_file(self):
        code, _, err = _run("batch", "--file", os.path.join(self.tmp.name, "nope.jsonl"))
        self.assertEqual(code, 1)
        self.assertIn("cannot read", err)

    def test_jobs_must_be_positive(self):
        code, _, _ = _run("batch", "--file", self.path, "--jobs", "0")
        self.assertEqual(code, 1)


if __name__ == "__main__":
    unittest.main()
