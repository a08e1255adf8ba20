import json
import os
import tempfile
import unittest

from framelab.errors import FormatError, LabelError
from framelab.frames import pg
from framelab.linalg import GF, Mat, SubgroupGamma, Subspace
from framelab.matroid import MinorCertificate
from framelab.rendering import (
    ReportRenderer,
    TableFormatter,
    certificate_from_dict,
    certificate_to_dict,
    load_json,
    matrix_from_dict,
    matroid_from_dict,
    matroid_to_dict,
    template_from_dict,
    template_to_dict,
)
from framelab.templates import FrameTemplate


class MatrixCodecTest(unittest.TestCase):

    def test_decode(self):
        m = matrix_from_dict({"p": 3, "rows": ["r"], "cols": ["a", "b"], "entries": [[4, 2]]})
        self.assertEqual(m.to_lists(), [[1, 2]])

    def test_malformed(self):
        bad = [
            {"rows": ["r"], "cols": ["a"], "entries": [[1]]},
            {"p": 3, "rows": ["r"], "cols": ["a"], "entries": [[1, 2]]},
            {"p": 3, "rows": ["r"], "cols": ["a"], "entries": [[True]]},
            {"p": 4, "rows": ["r"], "cols": ["a"], "entries": [[1]]},
            {"p": 3, "rows": [1], "cols": ["a"], "entries": [[1]]},
            [],
        ]
        for data in bad:
            with self.subTest(data=data):
                with self.assertRaises(FormatError):
                    matrix_from_dict(data)

    def test_duplicate_labels_are_label_errors(self):
        with self.assertRaises(LabelError):
            matrix_from_dict({"p": 2, "rows": ["r"], "cols": ["a", "a"], "entries": [[1, 0]]})


class MatroidCodecTest(unittest.TestCase):

    def test_kind_is_checked(self):
        data = matroid_to_dict(pg(1, 2))
        self.assertEqual(data["kind"], "represented-matroid")
        self.assertEqual(matroid_from_dict(data), pg(1, 2))
        with self.assertRaises(FormatError):
            matroid_from_dict({**data, "kind": "template"})


class TemplateCodecTest(unittest.TestCase):

    def test_template_survives_json(self):
        f = GF(3)
        phi = FrameTemplate(
            SubgroupGamma.full(f),
            C=("c",), X=("x",), Y0=("y",), Y1=(),
            a1=Mat.from_rows(f, [[1, 2]], ["x"], ["y", "c"]),
            delta=Subspace.from_vectors(f, ("y", "c"), [[1, 1]]),
            lam=Subspace.full(f, ("x",)),
        )
        decoded = template_from_dict(json.loads(json.dumps(template_to_dict(phi))))
        self.assertEqual(decoded, phi)

    def test_bad_gamma(self):
        data = template_to_dict(FrameTemplate.trivial(SubgroupGamma.trivial(GF(5))))
        data["gamma"] = [1, 2]
        with self.assertRaises(FormatError):
            template_from_dict(data)


class CertificateCodecTest(unittest.TestCase):

    def test_decode(self):
        cert = MinorCertificate(("a",), ("b",), {"x": "c"}, {"x": 2}, "represented")
        decoded = certificate_from_dict(certificate_to_dict(cert))
        self.assertEqual(decoded, cert)

    def test_unknown_mode(self):
        with self.assertRaises(FormatError):
            certificate_from_dict({"contract": [], "delete": [], "map": {}, "mode": "fuzzy"})


class LoadJsonTest(unittest.TestCase):

    def test_missing_and_broken_files(self):
        with tempfile.TemporaryDirectory() as tmp:
            broken = os.path.join(tmp, "broken.json")
            with open(broken, "w", encoding="utf-8") as f:
                f.write("{not json")
            with self.assertRaises(FormatError):
                load_json(broken)
            with self.assertRaises(FormatError):
                load_json(os.path.join(tmp, "missing.json"))


class ReportTest(unittest.TestCase):

    def test_summary(self):
        data = ReportRenderer(include_matrices=False).to_data({"fano": pg(2, 2)})
        self.assertEqual(data["fano"]["size"], 7)
        self.assertTrue(data["fano"]["simple"])
        self.assertFalse(data["fano"]["affine_restriction"])

    def test_render_is_json(self):
        text = ReportRenderer(include_matrices=False).render({"fano": pg(2, 2), "ok": True})
        data = json.loads(text)
        self.assertEqual(data["fano"]["rank"], 3)
        self.assertTrue(data["ok"])

    def test_minor_report(self):
        self.assertEqual(ReportRenderer.minor_report(None, exhaustive=False)["verdict"], "unknown")
        self.assertFalse(ReportRenderer.minor_report(None)["minor"])

    def test_extremal_table(self):
        text = TableFormatter.extremal_table(2, 1, [0, 1], [1, 2])
        self.assertEqual(text, "t\tn\tf\n0\t1\t1\n0\t2\t3\n1\t1\t1\n1\t2\t3\n")
