import unittest

from framelab.errors import LabelError, PreconditionError
from framelab.frames import ag, pg
from framelab.linalg import GF, Mat
from framelab.matroid import (
    IsoClassCache,
    RepresentedMatroid,
    connectivity,
    find_restriction,
    is_affine_restriction,
    is_isomorphic,
    is_vertically_k_connected,
    max_line_size,
    same_matroid,
)


def non_fano() -> RepresentedMatroid:
    columns = {
        "a": [1, 0, 0], "b": [0, 1, 0], "c": [0, 0, 1],
        "d": [1, 1, 0], "e": [1, 0, 1], "f": [0, 1, 1], "g": [1, 1, 1],
    }
    return RepresentedMatroid.from_columns(GF(3), ["r0", "r1", "r2"], columns)


def u24(p: int, x: int) -> RepresentedMatroid:
    return RepresentedMatroid.from_rows(GF(p), [[1, 0, 1, 1], [0, 1, 1, x]], ["a", "b", "c", "d"])


class RepresentedMatroidTest(unittest.TestCase):

    def test_fano_basics(self):
        fano = pg(2, 2)
        self.assertEqual((fano.size, fano.rank), (7, 3))
        self.assertTrue(fano.is_simple())
        self.assertEqual(fano.dual().rank, 4)
        self.assertEqual(fano.dual().dual(), fano)

    def test_dependent_rows_are_reduced_away(self):
        m = RepresentedMatroid.from_rows(GF(2), [[1, 0, 1], [0, 1, 1], [1, 1, 0]])
        self.assertEqual(m.rank, 2)

    def test_contract_matches_pivoting(self):
        fano = pg(2, 2)
        contracted = fano.contract(["p0"])
        self.assertEqual((contracted.rank, contracted.size), (2, 6))
        self.assertEqual(contracted.epsilon(), 3)
        self.assertEqual(contracted, fano.contract_by_pivoting(["p0"]))

    def test_loops_and_coloops(self):
        columns = {"a": [1, 0, 0], "b": [0, 1, 0], "c": [1, 1, 0], "z": [0, 0, 0], "d": [0, 0, 1]}
        m = RepresentedMatroid.from_columns(GF(2), ["r0", "r1", "r2"], columns)
        self.assertEqual(m.loops(), ["z"])
        self.assertEqual(m.coloops(), ["d"])
        self.assertEqual(m.epsilon(), 4)

    def test_parallel_classes_and_simplification(self):
        m = RepresentedMatroid.from_columns(GF(3), ["r0", "r1"], {"a": [1, 0], "b": [2, 0], "c": [0, 1]})
        self.assertEqual(m.parallel_classes(), [("a", "b"), ("c",)])
        simple, eps = m.simplify()
        self.assertEqual(eps, 2)
        self.assertEqual(simple.ground, ("a", "c"))

    def test_series_classes_of_a_triangle(self):
        triangle = RepresentedMatroid.from_rows(GF(2), [[1, 0, 1], [0, 1, 1]])
        self.assertEqual(triangle.series_classes(), [("e0", "e1", "e2")])

    def test_unknown_label(self):
        with self.assertRaises(LabelError):
            pg(2, 2).delete(["nope"])

    def test_scaling_keeps_the_matroid(self):
        m = u24(5, 2)
        self.assertEqual(m.scale({"c": 3, "d": 4}), m)
        self.assertFalse(m.scale({"c": 3}).same_row_space(m))

    def test_closure(self):
        fano = pg(2, 2)
        self.assertEqual(fano.oracle.closure(["p0", "p1"]), ["p0", "p1", "p2"])


class IsomorphismTest(unittest.TestCase):

    def test_relabelled_copy(self):
        fano = pg(2, 2)
        moved = fano.relabel({e: f"q{i}" for i, e in enumerate(reversed(fano.ground))})
        certificate = is_isomorphic(fano, moved)
        self.assertIsNotNone(certificate)
        self.assertTrue(same_matroid(certificate.apply(fano), moved))

    def test_fano_is_not_non_fano(self):
        self.assertIsNone(is_isomorphic(pg(2, 2), non_fano()))

    def test_represented_mode_sees_cross_ratios(self):
        a, b = u24(7, 2), u24(7, 3)
        self.assertIsNotNone(is_isomorphic(a, b, "abstract"))
        self.assertIsNone(is_isomorphic(a, b, "represented"))
        self.assertIsNotNone(is_isomorphic(a, u24(7, 4), "represented"))

    def test_find_restriction(self):
        line = RepresentedMatroid.from_rows(GF(2), [[1, 0, 1], [0, 1, 1]])
        fano = pg(2, 2)
        certificate = find_restriction(line, fano)
        self.assertIsNotNone(certificate)
        image = fano.restrict(certificate.bijection.values())
        self.assertEqual(image.rank, 2)
        self.assertIsNone(find_restriction(u24(3, 2), fano))

    def test_max_line_size(self):
        self.assertEqual(max_line_size(pg(2, 2)), 3)
        self.assertEqual(max_line_size(pg(2, 3)), 4)

    def test_iso_class_cache(self):
        cache = IsoClassCache(mode="abstract")
        fano = pg(2, 2)
        self.assertTrue(cache.add(fano))
        self.assertFalse(cache.add(fano.relabel({"p0": "z"})))
        self.assertTrue(cache.add(non_fano()))
        self.assertEqual(len(cache), 2)
        self.assertIs(cache.find(fano), fano)


class ConnectivityTest(unittest.TestCase):

    def direct_sum(self) -> RepresentedMatroid:
        columns = {
            "a": [1, 0, 0, 0], "b": [0, 1, 0, 0], "c": [1, 1, 0, 0],
            "d": [0, 0, 1, 0], "e": [0, 0, 0, 1], "f": [0, 0, 1, 1],
        }
        return RepresentedMatroid.from_columns(GF(2), ["r0", "r1", "r2", "r3"], columns)

    def test_fano_is_vertically_three_connected(self):
        self.assertTrue(is_vertically_k_connected(pg(2, 2), 3))

    def test_direct_sum_separates(self):
        m = self.direct_sum()
        self.assertEqual(connectivity(m, ["a", "b", "c"]), 0)
        self.assertFalse(is_vertically_k_connected(m, 2))

    def test_k_above_rank(self):
        with self.assertRaises(PreconditionError):
            is_vertically_k_connected(pg(2, 2), 4)

    def test_affine_restriction(self):
        self.assertTrue(is_affine_restriction(ag(2, 3)))
        self.assertFalse(is_affine_restriction(pg(2, 2)))
        loop = RepresentedMatroid(Mat.from_rows(GF(2), [[1, 0]]))
        self.assertFalse(is_affine_restriction(loop))
