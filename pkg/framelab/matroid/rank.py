"""Cached rank queries on column subsets, keyed by bit masks."""

from collections.abc import Iterable

import numpy as np

from framelab.errors import LabelError
from framelab.linalg.matrix import Mat, pack_rows


class RankOracle:
    """Answers r(X) for subsets X of a representation's columns.

    Subsets are bit masks over the column order. Over GF(2) each column is a
    packed int and ranks come from an XOR basis; other primes eliminate
    numpy vectors against an insertion-ordered pivot table.
    """

    def __init__(self, rep: Mat):
        self.p = rep.p
        self.labels = rep.col_labels
        self.index = {label: j for j, label in enumerate(self.labels)}
        if self.p == 2:
            self._packed = pack_rows(rep.entries.T)
        else:
            self._vectors = [rep.entries[:, j].copy() for j in range(len(self.labels))]
            self._inverse = rep.field.inverse_table
        self._cache: dict[int, int] = {}

    def mask(self, labels: Iterable[str]) -> int:
        m = 0
        for label in labels:
            try:
                m |= 1 << self.index[label]
            except KeyError:
                raise LabelError(f"unknown element {label!r}") from None
        return m

    def labels_of(self, mask: int) -> list[str]:
        return [label for j, label in enumerate(self.labels) if mask >> j & 1]

    def rank(self, labels: Iterable[str]) -> int:
        return self.rank_mask(self.mask(labels))

    def rank_mask(self, mask: int, cache: bool = True) -> int:
        if cache and mask in self._cache:
            return self._cache[mask]
        indices = [j for j in range(len(self.labels)) if mask >> j & 1]
        if self.p == 2:
            value = self._rank_gf2(indices)
        else:
            value = self._rank_modp(indices)
        if cache:
            self._cache[mask] = value
        return value

    def _rank_gf2(self, indices: list[int]) -> int:
        basis: list[int] = []
        for j in indices:
            v = self._packed[j]
            for b in basis:
                v = min(v, v ^ b)
            if v:
                basis.append(v)
                basis.sort(reverse=True)
        return len(basis)

    def _rank_modp(self, indices: list[int]) -> int:
        p = self.p
        pivots: dict[int, np.ndarray] = {}
        for j in indices:
            v = self._vectors[j]
            for i, row in pivots.items():
                if v[i]:
                    v = (v - v[i] * row) % p
            nz = np.flatnonzero(v)
            if nz.size:
                i = int(nz[0])
                pivots[i] = (v * self._inverse[v[i]]) % p
        return len(pivots)

    def is_independent(self, labels: Iterable[str]) -> bool:
        labels = list(labels)
        return self.rank(labels) == len(labels)

    def closure(self, labels: Iterable[str]) -> list[str]:
        base = self.mask(labels)
        r = self.rank_mask(base)
        return [
            label for j, label in enumerate(self.labels)
            if base >> j & 1 or self.rank_mask(base | 1 << j) == r
        ]
