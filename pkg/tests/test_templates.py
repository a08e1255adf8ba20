import unittest

import numpy as np

from framelab.errors import LabelError, PreconditionError, ResourceLimitError
from framelab.frames import DowlingSpec, FrameClassParams, dowling, is_frame_matrix, pg, projection_frame_data
from framelab.linalg import GF, Mat, SubgroupGamma, Subspace
from framelab.matroid import RepresentedMatroid, is_isomorphic
from framelab.templates import (
    MAX_ENUMERATION_GROUND,
    FrameTemplate,
    ShiftMatrix,
    apply_unitary,
    check_respect,
    complexity,
    conforming_matroid,
    contract_template,
    density_bound_dual,
    density_bound_primal,
    dual_bound,
    enumerate_conforming,
    equivalence_evidence,
    frame_class_template,
    is_reduced,
    is_y_reduced,
    normalize_delta,
    primal_bound,
    random_frame_matrix,
    random_template,
    reduce,
    respects,
    subclass_witness,
    verify_trace,
)


def contractible_template() -> FrameTemplate:
    """One row x spanning the column c, with y riding along on x."""
    f = GF(2)
    return FrameTemplate(
        SubgroupGamma.trivial(f),
        C=("c",), X=("x",), Y0=("y",), Y1=(),
        a1=Mat.from_rows(f, [[1, 1]], ["x"], ["y", "c"]),
        delta=Subspace.zero(f, ("y", "c")),
        lam=Subspace.zero(f, ("x",)),
    )


def delta_template() -> FrameTemplate:
    f = GF(3)
    return FrameTemplate(
        SubgroupGamma.trivial(f),
        C=(), X=(), Y0=("y",), Y1=(),
        a1=Mat.zeros(f, (), ("y",)),
        delta=Subspace.full(f, ("y",)),
        lam=Subspace.zero(f, ()),
    )


class FrameTemplateTest(unittest.TestCase):

    def test_labels_must_be_disjoint(self):
        f = GF(2)
        with self.assertRaises(LabelError):
            FrameTemplate(
                SubgroupGamma.trivial(f), C=("a",), X=("a",), Y0=(), Y1=(),
                a1=Mat.zeros(f, ("a",), ("a",)), delta=Subspace.zero(f, ("a",)), lam=Subspace.zero(f, ("a",)),
            )

    def test_a1_labels(self):
        f = GF(2)
        with self.assertRaises(LabelError):
            FrameTemplate(
                SubgroupGamma.trivial(f), C=("c",), X=(), Y0=(), Y1=(),
                a1=Mat.zeros(f, (), ("d",)), delta=Subspace.zero(f, ("c",)), lam=Subspace.zero(f, ()),
            )

    def test_equality_and_complexity(self):
        gamma = SubgroupGamma.trivial(GF(3))
        self.assertEqual(FrameTemplate.trivial(gamma), FrameTemplate.trivial(gamma))
        self.assertEqual(complexity(FrameTemplate.trivial(gamma)), 0)
        self.assertEqual(complexity(contractible_template()), 3)

    def test_lambda_partition(self):
        phi = frame_class_template(SubgroupGamma.trivial(GF(3)), 2)
        self.assertEqual(phi.lambda_partition(), (("x1", "x2"), ()))
        self.assertEqual(contractible_template().lambda_partition(), ((), ("x",)))


class RespectTest(unittest.TestCase):

    def setUp(self):
        self.f = GF(3)
        self.phi = frame_class_template(SubgroupGamma.trivial(self.f), 1)

    def test_projection_row_over_a_frame(self):
        a = Mat.from_columns(self.f, ["x1", "b1", "b2"], {"e1": [2, 1, 0], "e2": [0, 0, 1], "g": [1, 2, 1]})
        witness = respects(a, self.phi)
        self.assertIsNotNone(witness)
        self.assertEqual(witness.z, ())
        self.assertEqual(witness.frame_cols, ("e1", "e2", "g"))
        self.assertEqual(witness.z_candidates, ("e2",))
        self.assertTrue(witness.validates(a, self.phi))

    def test_non_frame_column(self):
        a = Mat.from_columns(self.f, ["x1", "b1", "b2"], {"e1": [1, 1, 0], "h": [1, 1, 1]})
        self.assertIsNone(respects(a, self.phi))

    def test_z_column_must_vanish_on_x(self):
        a = Mat.from_columns(self.f, ["x1", "b1", "b2"], {"e1": [1, 1, 0]})
        self.assertIsNone(check_respect(a, self.phi, ["e1"]))


class ConformingMatroidTest(unittest.TestCase):

    def setUp(self):
        f = GF(2)
        self.phi = FrameTemplate(
            SubgroupGamma.trivial(f),
            C=(), X=(), Y0=(), Y1=("y",),
            a1=Mat.zeros(f, (), ("y",)),
            delta=Subspace.full(f, ("y",)),
            lam=Subspace.zero(f, ()),
        )
        self.a = Mat.from_columns(f, ["b1", "b2"], {"y": [1, 1], "e1": [1, 0], "e2": [0, 1], "z": [1, 0]})

    def test_shift_moves_z(self):
        shift = ShiftMatrix(self.a.col_labels, {"z": "y"})
        m = conforming_matroid(self.a, shift, self.phi)
        self.assertEqual(m.ground, ("e1", "e2", "z"))
        self.assertEqual(m.epsilon(), 2)
        self.assertEqual(m.parallel_classes(), [("e1",), ("e2", "z")])

    def test_shift_must_come_from_y1(self):
        shift = ShiftMatrix(self.a.col_labels, {"z": "e1"})
        with self.assertRaises(PreconditionError):
            conforming_matroid(self.a, shift, self.phi)

    def test_shift_matrix_rules(self):
        with self.assertRaises(PreconditionError):
            ShiftMatrix(("a", "b"), {"a": "a"})
        with self.assertRaises(LabelError):
            ShiftMatrix(("a", "b"), {"a": "c"})


class TransformTest(unittest.TestCase):

    def test_contract_template(self):
        phi = contract_template(contractible_template(), ["x"], ["c"])
        self.assertEqual((phi.X, phi.C, phi.Y0), ((), (), ("y",)))
        self.assertEqual(phi.delta.dim, 0)

    def test_contract_needs_full_rank(self):
        phi = contractible_template()
        zero = phi.replace(a1=Mat.zeros(phi.field, ("x",), phi.cy))
        with self.assertRaises(PreconditionError):
            contract_template(zero, ["x"], ["c"])

    def test_singular_unitary(self):
        phi = contractible_template()
        with self.assertRaises(PreconditionError):
            apply_unitary(phi, Mat.zeros(phi.field, ("x",), ("x",)))

    def test_normalize_delta(self):
        phi = normalize_delta(delta_template())
        self.assertEqual((len(phi.X), len(phi.C)), (1, 1))
        self.assertEqual(phi.delta, Subspace.coordinates(phi.field, phi.cy, phi.C))
        self.assertTrue(is_y_reduced(phi))


class ReductionTest(unittest.TestCase):

    def test_already_reduced(self):
        phi = delta_template()
        self.assertTrue(is_reduced(phi))
        reduced, trace = reduce(phi)
        self.assertIs(reduced, phi)
        self.assertEqual(len(trace), 0)

    def test_contraction_pass(self):
        reduced, trace = reduce(contractible_template())
        self.assertTrue(is_reduced(reduced))
        self.assertEqual([step.name for step in trace], ["contract"])
        self.assertEqual(reduced.X, ())

    def test_random_templates_reduce(self):
        rng = np.random.default_rng(7)
        for i in range(25):
            phi = random_template(rng, p=int(rng.choice([2, 3])), max_complexity=4)
            with self.subTest(i=i, template=phi.summary()):
                reduced, trace = reduce(phi)
                self.assertTrue(is_reduced(reduced))
                for step in trace:
                    self.assertEqual(step.before.gamma, reduced.gamma)

    def test_trace_evidence(self):
        _, trace = reduce(contractible_template())
        evidence = verify_trace(trace, max_ground=2, max_rows=1)
        self.assertEqual(len(evidence), 1)
        self.assertTrue(evidence[0].equivalent, evidence[0].to_dict())


class EnumerationTest(unittest.TestCase):

    def test_binary_frame_matroids(self):
        classes = enumerate_conforming(FrameTemplate.trivial(SubgroupGamma.trivial(GF(2))), 3, 2)
        self.assertEqual(len(classes), 4)
        self.assertEqual(sorted((m.rank, m.size) for m in classes), [(0, 0), (1, 1), (2, 2), (2, 3)])

    def test_evidence_separates_frame_groups(self):
        trivial = FrameTemplate.trivial(SubgroupGamma.trivial(GF(3)))
        full = FrameTemplate.trivial(SubgroupGamma.full(GF(3)))
        evidence = equivalence_evidence(trivial, full, 4, 2)
        self.assertEqual(evidence.to_dict()["verdict"], "differ")
        self.assertEqual(evidence.unmatched_left, [])
        self.assertEqual(len(evidence.unmatched_right), 1)
        self.assertEqual((evidence.unmatched_right[0].size, evidence.unmatched_right[0].rank), (4, 2))

    def test_evidence_for_identical_templates(self):
        phi = FrameTemplate.trivial(SubgroupGamma.trivial(GF(2)))
        self.assertTrue(equivalence_evidence(phi, phi, 2, 1).equivalent)

    def test_ground_cap(self):
        phi = FrameTemplate.trivial(SubgroupGamma.trivial(GF(2)))
        with self.assertRaises(ResourceLimitError):
            enumerate_conforming(phi, MAX_ENUMERATION_GROUND + 1, 1)


class DensityTest(unittest.TestCase):

    def test_dowling_geometry_is_tight(self):
        gamma = SubgroupGamma.trivial(GF(2))
        m = dowling(DowlingSpec(FrameClassParams(gamma), 4))
        check = density_bound_primal(FrameTemplate.trivial(gamma), m)
        self.assertEqual((check.bound, check.epsilon), (10, 10))
        self.assertTrue(check.holds)
        self.assertTrue(check.reduced)

    def test_fano_breaks_the_graphic_bound(self):
        gamma = SubgroupGamma.trivial(GF(2))
        check = density_bound_primal(FrameTemplate.trivial(gamma), pg(2, 2))
        self.assertFalse(check.holds)
        self.assertEqual(check.to_dict()["bound"], 6)

    def test_bounds(self):
        phi = frame_class_template(SubgroupGamma.trivial(GF(3)), 2)
        self.assertEqual(primal_bound(phi, 1), 1 + 27 * 2 * 3)
        self.assertEqual(dual_bound(FrameTemplate.trivial(SubgroupGamma.trivial(GF(2))), 4), 13)

    def test_enumerated_matroids_meet_both_bounds(self):
        rng = np.random.default_rng(21)
        for i in range(8):
            phi = random_template(rng, int(rng.choice([2, 3])), max_complexity=2, max_delta_dim=1, max_lambda_dim=1)
            reduced, _ = reduce(phi)
            for m in enumerate_conforming(reduced, 2, 1):
                with self.subTest(i=i, template=reduced.summary(), size=m.size, rank=m.rank):
                    self.assertTrue(density_bound_primal(reduced, m).holds)
                    self.assertTrue(density_bound_dual(reduced, m.dual()).holds)

    def test_dual_check(self):
        gamma = SubgroupGamma.trivial(GF(2))
        check = density_bound_dual(FrameTemplate.trivial(gamma), pg(2, 2))
        self.assertEqual(check.side, "dual")
        self.assertTrue(check.holds)


class SubclassWitnessTest(unittest.TestCase):

    def setUp(self):
        f = GF(3)
        self.gamma = SubgroupGamma.trivial(f)
        self.phi = FrameTemplate(
            self.gamma,
            C=("c1",), X=(), Y0=(), Y1=(),
            a1=Mat.zeros(f, (), ("c1",)),
            delta=Subspace.full(f, ("c1",)),
            lam=Subspace.zero(f, ()),
        )
        a = Mat.from_columns(f, ["b1", "b2"], {"e1": [1, 0], "e2": [0, 1], "f": [2, 1], "w": [1, 1]})
        self.data = projection_frame_data(a, [], ["w"], self.gamma)

    def test_extra_column_through_delta(self):
        witness = subclass_witness(self.phi, self.data)
        self.assertTrue(witness.validates())
        u24 = RepresentedMatroid.from_rows(GF(3), [[1, 0, 1, 1], [0, 1, 1, 2]])
        self.assertIsNotNone(is_isomorphic(witness.pattern, u24))

    def test_delta_too_small(self):
        with self.assertRaises(PreconditionError):
            subclass_witness(FrameTemplate.trivial(self.gamma), self.data)

    def test_projection_row_goes_through_the_delta_basis(self):
        f = GF(3)
        phi = FrameTemplate(
            self.gamma,
            C=("c1",), X=("x1",), Y0=(), Y1=(),
            a1=Mat.from_rows(f, [[1]], ["x1"], ["c1"]),
            delta=Subspace.full(f, ("c1",)),
            lam=Subspace.full(f, ("x1",)),
        )
        self.assertTrue(is_reduced(phi))
        a = Mat.from_columns(f, ["x", "b1", "b2"], {
            "e1": [0, 1, 0], "e2": [1, 0, 1], "f": [1, 2, 1], "w": [2, 1, 1],
        })
        witness = subclass_witness(phi, projection_frame_data(a, ["x"], ["w"], self.gamma))
        self.assertIn("t=1", witness.certificate.notes)
        self.assertIn("C^=['c1']", witness.certificate.notes)
        self.assertIsNotNone(is_isomorphic(witness.pattern, RepresentedMatroid(a)))
        self.assertTrue(witness.validates())

    def test_template_must_be_reduced(self):
        f = GF(3)
        phi = self.phi.replace(delta=Subspace.zero(f, ("c1",)))
        with self.assertRaises(PreconditionError):
            subclass_witness(phi, self.data)


class GeneratorTest(unittest.TestCase):

    def test_random_template_respects_complexity(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            phi = random_template(rng, 3, max_complexity=3)
            self.assertLessEqual(complexity(phi), 3)
            self.assertLessEqual(phi.delta.dim, 2)

    def test_random_frame_matrix(self):
        rng = np.random.default_rng(1)
        gamma = SubgroupGamma(GF(5), (1, 4))
        m = random_frame_matrix(rng, gamma, 4, 10)
        self.assertEqual(m.shape, (4, 10))
        self.assertTrue(is_frame_matrix(m, gamma))
        self.assertTrue(all(any(c) for c in m.columns().values()))
