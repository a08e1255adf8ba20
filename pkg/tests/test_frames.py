import unittest
from math import comb

from framelab.errors import PreconditionError
from framelab.frames import (
    DowlingSpec,
    FrameClassParams,
    StackedFrameRep,
    ag,
    build_W,
    build_Wt,
    check_projection_frame_data,
    dowling,
    dowling_extension,
    dowling_extension_minor,
    extremal_f,
    frame_class_order,
    frame_minor_step,
    geometry,
    is_frame_matrix,
    is_frame_matrix_up_to_scaling,
    natural_key,
    pg,
    primesubfield_minor,
    projection_frame_data,
    witness_techodd,
    witness_techthree,
    witness_techtwo,
)
from framelab.linalg import GF, Mat, SubgroupGamma


class ExtremalFunctionTest(unittest.TestCase):

    def test_small_values(self):
        self.assertEqual(extremal_f(2, 1, 0, 3), 6)
        self.assertEqual(extremal_f(2, 1, 1, 3), 7)
        self.assertEqual(extremal_f(3, 2, 0, 3), 9)
        self.assertEqual(extremal_f(5, 2, 1, 3), 21)

    def test_rank_below_t(self):
        with self.assertRaises(PreconditionError):
            extremal_f(2, 1, 3, 2)

    def test_class_order(self):
        f = GF(5)
        small = FrameClassParams(SubgroupGamma.trivial(f), 0)
        large = FrameClassParams(SubgroupGamma.trivial(f), 1)
        self.assertTrue(frame_class_order(small, large))
        self.assertFalse(frame_class_order(large, small))


class DowlingTest(unittest.TestCase):

    def test_size_matches_extremal_function(self):
        cases = [
            (SubgroupGamma.trivial(GF(2)), 0, 4),
            (SubgroupGamma.full(GF(3)), 0, 3),
            (SubgroupGamma(GF(5), (1, 4)), 1, 3),
            (SubgroupGamma.trivial(GF(3)), 2, 3),
        ]
        for gamma, t, n in cases:
            with self.subTest(p=gamma.field.p, gamma=gamma.elements, t=t, n=n):
                m = dowling(DowlingSpec(FrameClassParams(gamma, t), n))
                self.assertEqual(m.size, extremal_f(gamma.field.p, gamma.order, t, n))
                self.assertEqual(m.rank, n)
                self.assertTrue(m.is_simple())

    def test_extensions_add_one_point(self):
        params = FrameClassParams(SubgroupGamma.trivial(GF(3)), 0)
        plain = dowling(DowlingSpec(params, 3))
        x_ext = dowling(DowlingSpec(params, 3, "x-extension", 2))
        box = dowling(DowlingSpec(params, 3, "box"))
        self.assertEqual(x_ext.size, plain.size + 1)
        self.assertEqual(box.size, plain.size + 1)
        self.assertTrue(x_ext.is_simple())
        self.assertTrue(box.is_simple())

    def test_spec_preconditions(self):
        params = FrameClassParams(SubgroupGamma(GF(5), (1, 4)), 0)
        with self.assertRaises(PreconditionError):
            DowlingSpec(params, 3, "x-extension", 4)
        with self.assertRaises(PreconditionError):
            DowlingSpec(params, 2, "box")
        with self.assertRaises(PreconditionError):
            DowlingSpec(FrameClassParams(params.gamma, 3), 2)
        with self.assertRaises(PreconditionError):
            FrameClassParams(params.gamma, -1)

    def test_natural_key(self):
        self.assertEqual(sorted(["b10", "b2", "b1"], key=natural_key), ["b1", "b2", "b10"])


class FrameMatrixTest(unittest.TestCase):

    def test_standard_matrix_is_frame(self):
        gamma = SubgroupGamma.full(GF(5))
        self.assertTrue(is_frame_matrix(build_W(3, gamma), gamma))
        self.assertFalse(is_frame_matrix(build_W(3, gamma), SubgroupGamma.trivial(GF(5))))

    def test_scaling_witness(self):
        gamma = SubgroupGamma(GF(5), (1, 4))
        m = Mat.from_rows(GF(5), [[2, 3, 0], [2, 0, 4]], col_labels=["a", "b", "c"])
        scalings = is_frame_matrix_up_to_scaling(m, gamma)
        self.assertIsNotNone(scalings)
        self.assertTrue(is_frame_matrix(m.scale_columns(scalings), gamma))

    def test_weight_three_column(self):
        m = Mat.from_rows(GF(3), [[1], [1], [1]])
        self.assertIsNone(is_frame_matrix_up_to_scaling(m, SubgroupGamma.full(GF(3))))


class GeometryTest(unittest.TestCase):

    def test_sizes(self):
        self.assertEqual(pg(2, 3).size, 13)
        self.assertEqual((ag(2, 3).size, ag(2, 3).rank), (9, 3))
        self.assertEqual(geometry("pg", 1, 5).size, 6)

    def test_unknown_kind(self):
        with self.assertRaises(PreconditionError):
            geometry("hg", 2, 2)


class FrameMinorStepTest(unittest.TestCase):

    def setUp(self):
        gamma = SubgroupGamma.trivial(GF(3))
        a = build_Wt(3, FrameClassParams(gamma, 1))
        b_rows = [r for r in a.row_labels if r != "x1"]
        self.rep = StackedFrameRep(a.select(rows=["x1"]), a.select(rows=b_rows), gamma)

    def test_contract_frame_column(self):
        step = frame_minor_step(self.rep, "b1@1", "contract")
        self.assertTrue(step.in_class(1))
        self.assertEqual(step.matroid(), self.rep.matroid().contract(["b1@1"]))

    def test_contract_projection_column(self):
        step = frame_minor_step(self.rep, "u1", "contract")
        self.assertEqual(step.t, 0)
        self.assertTrue(step.in_class(0))
        self.assertEqual(step.matroid(), self.rep.matroid().contract(["u1"]))

    def test_delete(self):
        step = frame_minor_step(self.rep, "b2@0", "delete")
        self.assertEqual(step.matroid(), self.rep.matroid().delete(["b2@0"]))


class ProjectionFrameDataTest(unittest.TestCase):

    def setUp(self):
        self.gamma = SubgroupGamma.trivial(GF(3))
        self.a = Mat.from_columns(GF(3), ["b1", "b2"], {"e1": [1, 0], "e2": [0, 1], "f": [2, 1], "w": [1, 1]})

    def test_extra_column_becomes_a_unit_row(self):
        data = projection_frame_data(self.a, [], ["w"], self.gamma)
        self.assertEqual(data.frame.row_labels, ("b1", "b2", "r:w"))
        self.assertEqual(data.frame.column("w"), (0, 0, 1))
        self.assertTrue(check_projection_frame_data(data, self.gamma))

    def test_without_extra_columns(self):
        with self.assertRaises(PreconditionError):
            projection_frame_data(self.a, [], [], self.gamma)


class CertificateTest(unittest.TestCase):

    def test_primesubfield_minus_one_outside(self):
        tagged = primesubfield_minor(3, SubgroupGamma.trivial(GF(3)))
        self.assertEqual(tagged.x, 2)
        self.assertEqual(tagged.branch, "minus-one-outside")
        self.assertTrue(tagged.validates())

    def test_primesubfield_minus_one_inside(self):
        tagged = primesubfield_minor(3, SubgroupGamma(GF(5), (1, 4)))
        self.assertNotIn(tagged.x, SubgroupGamma(GF(5), (1, 4)))
        self.assertTrue(tagged.branch.startswith("gamma="))
        self.assertTrue(tagged.validates())

    def test_primesubfield_replays(self):
        cases = [
            (SubgroupGamma.trivial(GF(3)), "minus-one-outside"),
            (SubgroupGamma(GF(5), (1, 4)), "gamma="),
            (SubgroupGamma(GF(7), (1, 2, 4)), "minus-one-outside"),
        ]
        for gamma, branch in cases:
            for n in (3, 4):
                with self.subTest(p=gamma.field.p, gamma=gamma.elements, n=n):
                    tagged = primesubfield_minor(n, gamma)
                    self.assertTrue(tagged.branch.startswith(branch))
                    self.assertNotIn(tagged.x, gamma)
                    self.assertTrue(tagged.validates())

    def test_primesubfield_full_gamma(self):
        with self.assertRaises(PreconditionError):
            primesubfield_minor(3, SubgroupGamma.full(GF(3)))

    def test_dowling_extension_box_outcome(self):
        params = FrameClassParams(SubgroupGamma.trivial(GF(2)), 0)
        extension = dowling_extension(params, 15, {"b1": 1, "b2": 1, "b3": 1, "b5": 1})
        tagged = dowling_extension_minor(extension, 3, params)
        self.assertEqual(tagged.variant, "box")
        self.assertTrue(tagged.validates())

    def test_dowling_extension_rank_too_small(self):
        params = FrameClassParams(SubgroupGamma.trivial(GF(2)), 0)
        extension = dowling_extension(params, 6, {"b1": 1, "b2": 1, "b3": 1})
        with self.assertRaises(PreconditionError):
            dowling_extension_minor(extension, 3, params)


class WitnessTest(unittest.TestCase):

    def test_binary(self):
        report = witness_techtwo(0)
        self.assertTrue(report.verdict, report.computed)

    def test_ternary(self):
        report = witness_techthree(0)
        self.assertTrue(report.verdict, report.computed)
        self.assertTrue(any("(0,0,1,2)" in note for note in report.notes))

    def test_odd(self):
        for p in (3, 5, 7):
            with self.subTest(p=p):
                report = witness_techodd(p, 0)
                self.assertTrue(report.verdict, report.computed)

    def test_odd_point_counts(self):
        for p, before, after in ((5, 10, 6), (7, 13, 8)):
            with self.subTest(p=p):
                computed = witness_techodd(p, 0).computed
                self.assertEqual(computed["epsilon(M)"]["value"], before)
                self.assertEqual(computed["epsilon(M/e)"]["value"], after)

    def test_odd_needs_odd_prime(self):
        with self.assertRaises(PreconditionError):
            witness_techodd(2, 0)

    def test_report_dict(self):
        data = witness_techthree(0).to_dict()
        self.assertEqual(data["verdict"], "pass")
        self.assertIn("Q.rank", data["computed"])


class FormulaConcordanceTest(unittest.TestCase):

    GRID = [(t, n) for t in range(5) for n in range(t, 13)]

    def test_binary_closed_form(self):
        for t, n in self.GRID:
            with self.subTest(t=t, n=n):
                self.assertEqual(extremal_f(2, 1, t, n), 2 ** t * comb(n - t + 1, 2) + 2 ** t - 1)

    def test_ternary_closed_form(self):
        for t, n in self.GRID:
            with self.subTest(t=t, n=n):
                self.assertEqual(extremal_f(3, 2, t, n), 3 ** t * (n - t) ** 2 + (3 ** t - 1) // 2)

    def test_odd_closed_form(self):
        for p in (3, 5, 7):
            g = (p - 1) // 2
            for t, n in self.GRID:
                with self.subTest(p=p, t=t, n=n):
                    expected = p ** t * (g * comb(n - t, 2) + n - t) + (p ** t - 1) // (p - 1)
                    self.assertEqual(extremal_f(p, g, t, n), expected)

    def test_counts_the_standard_columns(self):
        for gamma in (SubgroupGamma.trivial(GF(2)), SubgroupGamma.full(GF(3))):
            for t, n in self.GRID:
                if n == 0:
                    continue
                with self.subTest(p=gamma.field.p, t=t, n=n):
                    columns = build_Wt(n, FrameClassParams(gamma, t)).shape[1]
                    self.assertEqual(columns, extremal_f(gamma.field.p, gamma.order, t, n))
