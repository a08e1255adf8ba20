from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import product

import numpy as np

from framelab.errors import LabelError, PreconditionError
from framelab.linalg.field import PrimeField
from framelab.linalg.matrix import Mat, kernel, rref, solve


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of GF(p)^E stored by its canonical RREF basis.

    Two subspaces over the same ordered ambient labels are equal exactly when
    their bases are identical.
    """
    basis: Mat

    @classmethod
    def span(cls, m: Mat) -> "Subspace":
        return cls(rref(m).basis())

    @classmethod
    def from_vectors(cls, field: PrimeField, ambient: Sequence[str], vectors: Sequence[Sequence[int]]) -> "Subspace":
        ambient = tuple(ambient)
        if not vectors:
            return cls.zero(field, ambient)
        return cls.span(Mat.from_rows(field, [list(v) for v in vectors], col_labels=ambient))

    @classmethod
    def zero(cls, field: PrimeField, ambient: Sequence[str]) -> "Subspace":
        return cls(Mat.zeros(field, (), tuple(ambient)))

    @classmethod
    def full(cls, field: PrimeField, ambient: Sequence[str]) -> "Subspace":
        ambient = tuple(ambient)
        return cls(Mat.identity(field, [f"v{i}" for i in range(len(ambient))], ambient))

    @classmethod
    def coordinates(cls, field: PrimeField, ambient: Sequence[str], support: Sequence[str]) -> "Subspace":
        """Span of the unit vectors on `support`."""
        ambient = tuple(ambient)
        support = set(support)
        vectors = [[1 if a == s else 0 for a in ambient] for s in ambient if s in support]
        return cls.from_vectors(field, ambient, vectors)

    @property
    def field(self) -> PrimeField:
        return self.basis.field

    @property
    def ambient(self) -> tuple[str, ...]:
        return self.basis.col_labels

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @cached_property
    def pivots(self) -> tuple[str, ...]:
        return rref(self.basis).pivot_cols

    def vectors(self) -> Iterator[tuple[int, ...]]:
        """Every vector of the subspace; p ** dim of them."""
        rows = self.basis.entries
        p = self.field.p
        if self.dim == 0:
            yield tuple([0] * len(self.ambient))
            return
        for coeffs in product(range(p), repeat=self.dim):
            yield tuple(int(x) for x in (np.array(coeffs) @ rows) % p)

    def contains(self, vector: Sequence[int]) -> bool:
        if len(vector) != len(self.ambient):
            raise PreconditionError(f"vector has length {len(vector)}, ambient has {len(self.ambient)}")
        if self.dim == 0:
            return not any(x % self.field.p for x in vector)
        return solve(self.basis.transpose(), list(vector)) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis.to_lists())

    def _check_ambient(self, other: "Subspace"):
        if self.ambient != other.ambient:
            raise LabelError("subspaces live over different ambient labels")

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace.span(self.basis.with_labels(row_labels=[f"a{i}" for i in range(self.dim)])
                             .vstack(other.basis.with_labels(row_labels=[f"b{i}" for i in range(other.dim)])))

    def intersection_dim(self, other: "Subspace") -> int:
        return self.dim + other.dim - (self + other).dim

    def is_skew(self, other: "Subspace") -> bool:
        return self.intersection_dim(other) == 0

    def project(self, labels: Sequence[str]) -> "Subspace":
        """U[X]: the image of the coordinate projection onto X."""
        return Subspace.span(self.basis.select(cols=labels))

    def embed(self, ambient: Sequence[str]) -> "Subspace":
        """U x {0} inside a larger ambient space."""
        ambient = tuple(ambient)
        missing = set(self.ambient) - set(ambient)
        if missing:
            raise LabelError(f"embedding loses coordinates {sorted(missing)}")
        data = np.zeros((self.dim, len(ambient)), dtype=np.int64)
        for j, label in enumerate(self.ambient):
            data[:, ambient.index(label)] = self.basis.entries[:, j]
        return Subspace.span(Mat(self.field, self.basis.row_labels, ambient, data))

    def reorder(self, ambient: Sequence[str]) -> "Subspace":
        if set(ambient) != set(self.ambient) or len(ambient) != len(self.ambient):
            raise LabelError("reorder needs the same ambient labels")
        return self.embed(ambient)

    def apply(self, u: Mat) -> "Subspace":
        """{u v : v in U} for a square u acting on column vectors over the ambient."""
        if u.shape != (len(self.ambient), len(self.ambient)):
            raise PreconditionError("linear map does not act on this ambient space")
        image = (self.basis.entries @ u.entries.T) % self.field.p
        return Subspace.span(Mat(self.field, self.basis.row_labels, self.ambient, image))

    def orthogonal_complement(self) -> "Subspace":
        if self.dim == 0:
            return Subspace.full(self.field, self.ambient)
        return Subspace.span(kernel(self.basis))

    def canonical_complement(self) -> "Subspace":
        """Span of the unit vectors at the non-pivot coordinates of the basis."""
        pivots = set(self.pivots)
        return Subspace.coordinates(self.field, self.ambient, [a for a in self.ambient if a not in pivots])

    def key(self) -> tuple:
        return self.basis.key()

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Subspace(GF({self.field.p}), ambient={list(self.ambient)}, basis={self.basis.to_lists()})"


def complementary_projection(u: Subspace, w: Subspace, v: Sequence[int]) -> tuple[int, ...]:
    """The w-part of v in the decomposition v = u-part + w-part."""
    u._check_ambient(w)
    n = len(u.ambient)
    if u.dim + w.dim != n or not u.is_skew(w):
        raise PreconditionError("subspaces are not complementary")
    if n == 0:
        return ()
    stacked = u.basis.with_labels(row_labels=[f"u{i}" for i in range(u.dim)]).vstack(
        w.basis.with_labels(row_labels=[f"w{i}" for i in range(w.dim)])
    )
    coeffs = solve(stacked.transpose(), list(v))
    if coeffs is None:
        raise AssertionError("complementary subspaces span the ambient space")
    w_coeffs = np.array(coeffs[u.dim:], dtype=np.int64)
    if w.dim == 0:
        return tuple([0] * n)
    return tuple(int(x) for x in (w_coeffs @ w.basis.entries) % u.field.p)
