import json
import os
import shutil
import unittest
from unittest.mock import patch

from orbifold_fusion.catalog.enumeration import enumerate_paper_labels
from orbifold_fusion.catalog.equivalence import Classifier, EquivalencePolicy
from orbifold_fusion.data.builders import build_example
from orbifold_fusion.data.documents import InputDocument, ReportDocument
from orbifold_fusion.data.reports import build_report
from orbifold_fusion.exceptions import BadParameter, NotEven, NotInvolution, UnknownBuilder
from orbifold_fusion.fusion.table import fusion_table, verify_ring
from orbifold_fusion.meta_config import LabelMode, RunConfig
from orbifold_fusion.selftest import run_selftest
from orbifold_fusion.utils.files import get_report_path, read_input_document, save_report
from tests.factories.settings import orbifold


class TestBuilders(unittest.TestCase):
    def test_a2_double(self):
        document = build_example("a2-double")
        self.assertEqual(document.name, "A2+A2")
        self.assertEqual(document.gram[0][:2], [2, -1])
        self.assertEqual(document.sigma[0], [0, 0, 1, 0])

    def test_a_n_shapes(self):
        document = build_example("an-dynkin:4")
        self.assertEqual(document.name, "A4-dynkin")
        self.assertEqual(document.gram[1], [-1, 2, -1, 0])
        self.assertEqual(document.sigma[0], [0, 0, 0, 1])

    def test_rank1_double(self):
        self.assertEqual(build_example("rank1-double:3").gram, [[6, 0], [0, 6]])

    def test_unknown_builder(self):
        with self.assertRaises(UnknownBuilder):
            build_example("e8-double")

    def test_bad_parameters(self):
        for builder in ("a2-double:1", "rank1-double:0", "rank1-double:x", "an-dynkin:1", "perm-double:[[2,0]]", "neg-identity:nope"):
            with self.assertRaises(BadParameter, msg=builder):
                build_example(builder)

    def test_neg_identity_rejects_odd_lattices(self):
        with self.assertRaises(NotEven):
            build_example("neg-identity:[[1]]").setting()


class TestInputDocument(unittest.TestCase):
    def test_reserialization_is_stable(self):
        document = build_example("an-dynkin:3")
        text = document.to_json()
        self.assertEqual(InputDocument.from_json(text).to_json(), text)

    def test_name_is_optional(self):
        document = InputDocument.from_json('{"gram": [[2]], "sigma": [[-1]]}')
        self.assertIsNone(document.name)
        self.assertEqual(document.setting().L_minus.rank, 1)

    def test_rejects_bad_documents(self):
        for text in ("[1, 2]", "{", '{"gram": [[2]]}', '{"gram": [[2]], "sigma": [[-1]], "extra": 1}', '{"gram": 2, "sigma": [[-1]]}'):
            with self.assertRaises(BadParameter, msg=text):
                InputDocument.from_json(text)

    def test_validates_sigma(self):
        with self.assertRaises(NotInvolution):
            InputDocument([[2, -1], [-1, 2]], [[0, -1], [1, -1]]).setting()

    def test_missing_file(self):
        with self.assertRaises(BadParameter):
            read_input_document("tests/does-not-exist.json")


class TestReportDocument(unittest.TestCase):
    def setUp(self):
        self.orb = orbifold("neg-identity:[[2]]")
        config = RunConfig(label_mode=LabelMode.CANONICAL)
        inventory = enumerate_paper_labels(self.orb)
        table = fusion_table(self.orb, config)
        self.report = build_report(self.orb, config.label_mode, inventory, table.classes, table, verify_ring(table, config))

    def test_reserialization_is_stable(self):
        text = self.report.to_json()
        self.assertEqual(ReportDocument.from_json(text).to_json(), text)
        self.assertEqual(self.report.to_json(), text)

    def test_sections(self):
        data = json.loads(self.report.to_json())
        self.assertEqual(data["mode"], "canonical")
        self.assertEqual(data["counts"]["global_dimension"], 8)
        self.assertEqual(len(data["labels"]), 8)
        self.assertEqual(len(data["fusion"]), 36)
        self.assertTrue(data["verification"]["unit"]["passed"])
        self.assertIsNone(data["qdims"])

    def test_setting_summary(self):
        summary = build_report(orbifold("a2-double"), LabelMode.PAPER).setting
        self.assertEqual(summary["rank"], 4)
        self.assertEqual(summary["lambda_classes"], 3)
        self.assertEqual(len(summary["characters"]), 4)
        self.assertEqual(summary["sigma_fixed_discriminant"], 3)
        self.assertEqual(summary["twisted_classes"], 6)
        self.assertEqual(summary["twisted_classes_expected"], 6)

    def test_setting_summary_for_a4(self):
        summary = build_report(orbifold("an-dynkin:4"), LabelMode.PAPER).setting
        self.assertEqual(summary["twisted_classes"], 8)
        self.assertEqual(summary["twisted_classes"], summary["twisted_classes_expected"])

    def test_discriminants_are_logged(self):
        with self.assertLogs("orbifold_fusion.lattice.setting", level="INFO") as logs:
            build_example("a2-double").setting()
        self.assertTrue(any("discriminants of A2+A2: Q Z3 x Z3" in line for line in logs.output), logs.output)

    @patch("orbifold_fusion.utils.files.OUTPUT_PATH", "tests/output")
    def test_save_report(self):
        path = save_report(self.report, self.orb.name, "table")
        self.assertEqual(path, get_report_path(self.orb.name, "table"))
        self.assertTrue(path.startswith(os.path.join("tests", "output", "reports")))
        with open(path) as f:
            self.assertEqual(f.read(), self.report.to_json())

    def tearDown(self):
        shutil.rmtree("tests/output", ignore_errors=True)


class TestSelftest(unittest.TestCase):
    def test_every_fixture_passes(self):
        outcomes = run_selftest()
        self.assertGreater(len(outcomes), 20)
        for outcome in outcomes:
            self.assertTrue(outcome.passed, "%s: expected %s, got %s" % (outcome.name, outcome.expected, outcome.actual))


class TestClassifier(unittest.TestCase):
    def test_index_of_finds_the_member_class(self):
        orb = orbifold("a2-double")
        labels = enumerate_paper_labels(orb).labels
        classifier = Classifier(orb, labels, EquivalencePolicy(LabelMode.CANONICAL))
        for label in labels:
            self.assertIn(label, classifier.classes[classifier.index_of(label)].members)


if __name__ == "__main__":
    unittest.main()
