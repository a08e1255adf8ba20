"""Algebraic laws of represented matroids over seeded random instances.

The default run checks a hundred instances per law; FRAMELAB_SLOW=1 checks a thousand.
"""

import os
import unittest

import numpy as np

from framelab.linalg import GF
from framelab.matroid import RepresentedMatroid, connectivity

INSTANCES = 1000 if os.environ.get("FRAMELAB_SLOW") == "1" else 100


def random_matroid(rng: np.random.Generator) -> RepresentedMatroid:
    p = int(rng.choice([2, 3, 5]))
    rows = int(rng.integers(1, 4))
    cols = int(rng.integers(3, 8))
    while True:
        entries = rng.integers(0, p, size=(rows, cols))
        if entries.any():
            return RepresentedMatroid.from_rows(GF(p), entries.tolist())


def random_subset(rng: np.random.Generator, labels, size: int) -> list[str]:
    return [labels[i] for i in sorted(rng.choice(len(labels), size=size, replace=False))]


class MatroidLawTest(unittest.TestCase):

    def instances(self, seed: int):
        rng = np.random.default_rng(seed)
        for i in range(INSTANCES):
            yield i, rng, random_matroid(rng)

    def test_dual_is_an_involution(self):
        for i, _, m in self.instances(100):
            with self.subTest(i=i):
                self.assertEqual(m.dual().dual(), m)
                self.assertEqual(m.dual().rank, m.size - m.rank)

    def test_contraction_and_deletion_commute(self):
        for i, rng, m in self.instances(101):
            ground = list(m.ground)
            k = int(rng.integers(0, min(3, len(ground) - 1) + 1))
            chosen = random_subset(rng, ground, k)
            split = int(rng.integers(0, k + 1))
            x, y = chosen[:split], chosen[split:]
            with self.subTest(i=i, contract=x, delete=y):
                self.assertEqual(m.contract(x).delete(y), m.delete(y).contract(x))
                self.assertEqual(m.contract(x), m.contract_by_pivoting(x))

    def test_connectivity_is_symmetric(self):
        for i, rng, m in self.instances(102):
            ground = list(m.ground)
            a = random_subset(rng, ground, int(rng.integers(0, len(ground) + 1)))
            rest = [e for e in ground if e not in set(a)]
            with self.subTest(i=i, side=a):
                self.assertEqual(connectivity(m, a), connectivity(m, rest))
                self.assertEqual(connectivity(m, a), connectivity(m.dual(), a))

    def test_rank_is_submodular(self):
        for i, rng, m in self.instances(103):
            ground = list(m.ground)
            a = set(random_subset(rng, ground, int(rng.integers(0, len(ground) + 1))))
            b = set(random_subset(rng, ground, int(rng.integers(0, len(ground) + 1))))
            with self.subTest(i=i, a=sorted(a), b=sorted(b)):
                self.assertGreaterEqual(m.rank_of(a) + m.rank_of(b), m.rank_of(a | b) + m.rank_of(a & b))

    def test_simplification_is_idempotent(self):
        for i, _, m in self.instances(104):
            simple, epsilon = m.simplify()
            again, epsilon_again = simple.simplify()
            with self.subTest(i=i):
                self.assertEqual(epsilon, m.epsilon())
                self.assertEqual(again, simple)
                self.assertEqual(epsilon_again, simple.size)
                self.assertTrue(simple.is_simple())
