import argparse
import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stdout
from unittest import mock

from framelab.cli import (
    EXIT_BUDGET,
    EXIT_FAILED,
    EXIT_FORMAT,
    EXIT_LABEL,
    EXIT_OK,
    EXIT_PRECONDITION,
    EXIT_USAGE,
    parse_evidence,
    parse_range,
    run,
)
from framelab.linalg import GF, SubgroupGamma
from framelab.rendering import dumps, template_to_dict
from framelab.search import BUDGET_ENV
from framelab.templates import FrameTemplate


@mock.patch.dict(os.environ, {BUDGET_ENV: ""})
class CliTest(unittest.TestCase):

    def setUp(self):
        tmp = tempfile.TemporaryDirectory()
        self.addCleanup(tmp.cleanup)
        self.tmp = tmp.name

    def path(self, name: str) -> str:
        return os.path.join(self.tmp, name)

    def run_cli(self, *argv: str) -> tuple[int, str]:
        out = io.StringIO()
        with redirect_stdout(out):
            code = run(["--no-progress-bar", *argv])
        return code, out.getvalue()

    def write_json(self, name: str, data) -> str:
        path = self.path(name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(dumps(data))
        return path

    def test_table_tsv(self):
        code, out = self.run_cli("table", "--p", "2", "--t", "0..1", "--n", "1..2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "t\tn\tf\n0\t1\t1\n0\t2\t3\n1\t1\t1\n1\t2\t3\n")

    def test_table_json(self):
        code, out = self.run_cli("--format", "json", "table", "--p", "2", "--n", "3")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out), [{"t": 0, "n": 3, "f": 6}])

    def test_construct_then_info(self):
        fano = self.path("fano.json")
        code, _ = self.run_cli("--output", fano, "construct", "pg", "--p", "2", "--dim", "2")
        self.assertEqual(code, EXIT_OK)
        code, out = self.run_cli("info", "--input", fano)
        self.assertEqual(code, EXIT_OK)
        summary = json.loads(out)
        self.assertEqual((summary["size"], summary["rank"], summary["epsilon"]), (7, 3, 7))

    def test_op_and_minor(self):
        host = self.path("pg32.json")
        self.run_cli("--output", host, "construct", "pg", "--p", "2", "--dim", "3")
        code, out = self.run_cli("minor", "--host", host, "--pattern", "pg:2:2")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(json.loads(out)["minor"])
        code, out = self.run_cli("op", "contract", "--input", host, "--labels", "p0")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(json.loads(out)["cols"]), 14)

    def test_unknown_label(self):
        fano = self.path("fano.json")
        self.run_cli("--output", fano, "construct", "pg")
        code, _ = self.run_cli("op", "delete", "--input", fano, "--labels", "nope")
        self.assertEqual(code, EXIT_LABEL)

    def test_missing_input(self):
        code, _ = self.run_cli("info", "--input", self.path("missing.json"))
        self.assertEqual(code, EXIT_FORMAT)

    def test_precondition(self):
        code, _ = self.run_cli(
            "construct", "dowling", "--p", "5", "--gamma", "1,4", "--n", "3", "--variant", "x-extension", "--x", "4",
        )
        self.assertEqual(code, EXIT_PRECONDITION)

    def test_verify_ternary_witness(self):
        code, out = self.run_cli("verify", "techthree", "--t", "0")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["verdict"], "pass")

    def test_verify_primesubfield(self):
        code, out = self.run_cli("verify", "primesubfield", "--p", "5", "--gamma", "1,4")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("branch", json.loads(out)["computed"])

    def test_extremal_budget(self):
        with mock.patch.dict(os.environ, {BUDGET_ENV: "5"}):
            code, out = self.run_cli("extremal", "--p", "2", "--rank", "3", "--exclude", "pg:2:2")
        self.assertEqual(code, EXIT_BUDGET)
        self.assertFalse(json.loads(out)["exhaustive"])

    def test_extremal_size_cap(self):
        code, _ = self.run_cli("extremal", "--p", "5", "--rank", "3", "--exclude", "pg:2:2")
        self.assertEqual(code, EXIT_BUDGET)

    def test_template_sample_and_reduce(self):
        template = self.path("template.json")
        code, _ = self.run_cli("--seed", "3", "--output", template, "template", "sample", "--p", "3")
        self.assertEqual(code, EXIT_OK)
        code, out = self.run_cli("template", "reduce", "--template", template)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("trace", json.loads(out))
        code, out = self.run_cli("template", "reduce", "--template", template, "--evidence", "1,1")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("evidence", json.loads(out))

    def test_template_density_failure(self):
        template = self.write_json("trivial.json", template_to_dict(FrameTemplate.trivial(SubgroupGamma.trivial(GF(2)))))
        fano = self.path("fano.json")
        self.run_cli("--output", fano, "construct", "pg")
        code, out = self.run_cli("template", "density", "--template", template, "--matroid", fano)
        self.assertEqual(code, EXIT_FAILED)
        self.assertFalse(json.loads(out)["holds"])

    def test_usage_errors(self):
        template = self.write_json("trivial.json", template_to_dict(FrameTemplate.trivial(SubgroupGamma.trivial(GF(2)))))
        usage = [
            ["--threads", "0", "table", "--p", "2", "--n", "3"],
            ["template", "reduce"],
            ["template", "reduce", "--template", template, "--evidence", "2..3"],
            ["template", "reduce", "--template", template, "--evidence", "2"],
        ]
        for argv in usage:
            with self.subTest(argv=argv):
                with self.assertRaises(SystemExit) as caught, redirect_stdout(io.StringIO()), \
                        mock.patch("sys.stderr", io.StringIO()):
                    run(argv)
                self.assertEqual(caught.exception.code, EXIT_USAGE)


class ArgumentParsingTest(unittest.TestCase):

    def test_forms(self):
        self.assertEqual(parse_range("3"), [3])
        self.assertEqual(parse_range("1..4"), [1, 2, 3, 4])
        self.assertEqual(parse_range("0,2,4"), [0, 2, 4])

    def test_evidence_pairs(self):
        self.assertEqual(parse_evidence("6,4"), (6, 4))
        for bad in ("2..3", "2", "1,2,3", "a,b", "-1,2"):
            with self.subTest(text=bad):
                with self.assertRaises(argparse.ArgumentTypeError):
                    parse_evidence(bad)
