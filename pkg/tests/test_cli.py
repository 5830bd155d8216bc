import json
import os
import shutil
import unittest
from unittest.mock import patch

from click.testing import CliRunner

from orbifold_fusion.cli import cli
from orbifold_fusion.data.builders import build_example


class TestCli(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()
        shutil.rmtree("tests/output", ignore_errors=True)

    def tearDown(self):
        shutil.rmtree("tests/output", ignore_errors=True)

    def invoke(self, *args):
        return self.runner.invoke(cli, list(args))

    def test_classify_counts(self):
        result = self.invoke("classify", "--builder", "a2-double")
        self.assertEqual(result.exit_code, 0, result.output)
        counts = result.stdout.strip().splitlines()[-1]
        for expected in ("type1: 12", "type2: 24", "twisted: 12", "twisted_signed: 24", "total_signed: 60", "global_dimension: 144"):
            self.assertIn(expected, counts)

    def test_classify_canonical(self):
        result = self.invoke("classify", "--builder", "neg-identity:[[2]]", "--labels", "canonical")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("members", result.stdout)
        self.assertIn("total: 8", result.stdout)

    def test_qdim_of_one_module(self):
        result = self.invoke("qdim", "--builder", "a2-double", "--module", "twisted:0:chi00:+")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(result.stdout.strip(), "sqrt(3)")

    def test_fuse_with_vacuum(self):
        result = self.invoke("fuse", "--builder", "a2-double", "type2:0,0/0,0:+", "twisted:0:chi00:-")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(result.stdout.strip().splitlines(), ["twisted:0:chi00:-", "total qdim: sqrt(3)"])

    def test_info_json(self):
        result = self.invoke("info", "--builder", "an-dynkin:3", "--format", "json")
        self.assertEqual(result.exit_code, 0, result.output)
        data = json.loads(result.stdout)
        self.assertEqual(data["setting"]["rank"], 3)
        self.assertEqual(data["mode"], "paper")

    def test_table_passes_required_checks(self):
        result = self.invoke("table", "--builder", "neg-identity:[[2]]")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("unit: passed", result.stdout)
        self.assertIn("associativity (informational)", result.stdout)

    def test_canonical_table_requires_every_check(self):
        result = self.invoke("table", "--builder", "neg-identity:[[2]]", "--labels", "canonical")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("associativity: passed (512 checked)", result.stdout)
        self.assertIn("contragredient_symmetry: passed", result.stdout)
        self.assertNotIn("(informational)", result.stdout)

    def test_input_file(self):
        os.makedirs("tests/output", exist_ok=True)
        path = os.path.join("tests", "output", "a1.json")
        with open(path, "w") as f:
            f.write(build_example("neg-identity:[[2]]").to_json())
        result = self.invoke("classify", "--input", path)
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("total_signed: 8", result.stdout)

    @patch("orbifold_fusion.utils.files.OUTPUT_PATH", "tests/output")
    def test_save(self):
        result = self.invoke("info", "--builder", "rank1-double:2", "--save")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertTrue(os.path.exists("tests/output/reports/rank1-double-2/info.json"))

    def test_input_errors_exit_with_1(self):
        for args in (
            ["info", "--builder", "e8-double"],
            ["info"],
            ["info", "--builder", "a2-double", "--input", "x.json"],
            ["info", "--input", "tests/does-not-exist.json"],
            ["info", "--builder", "neg-identity:[[1]]"],
            ["qdim", "--builder", "a2-double", "--module", "type3:0"],
            ["classify", "--builder", "a2-double", "--labels", "other"],
            ["fuse", "--builder", "a2-double", "twisted:0:chi00:+"],
        ):
            result = self.invoke(*args)
            self.assertEqual(result.exit_code, 1, (args, result.output))

    def test_error_message(self):
        result = self.invoke("info", "--builder", "e8-double")
        self.assertIn("error: UnknownBuilder", result.stderr)


if __name__ == "__main__":
    unittest.main()
