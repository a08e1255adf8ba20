"""Represented matroids: a ground set with a row space taken up to column scaling."""

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

from framelab.errors import LabelError
from framelab.linalg import Mat, PrimeField, Subspace, kernel, projective_normal_form, rref
from framelab.matroid.rank import RankOracle

logger = logging.getLogger(__name__)


def normalize_column(column: Sequence[int], field: PrimeField) -> tuple[int, ...] | None:
    """Scale a column so its first nonzero entry is 1; None for a zero column."""
    for x in column:
        if x % field.p:
            factor = field.inv(x)
            return tuple((y * factor) % field.p for y in column)
    return None


@dataclass(frozen=True, eq=False)
class RepresentedMatroid:
    """M(A) for a matrix A over GF(p).

    The representation keeps the caller's rows when they are independent and
    is replaced by its row-reduced basis otherwise. Equality and hashing go
    through the projective normal form, so matrices with the same row space up
    to column scaling give equal matroids.
    """
    rep: Mat

    def __post_init__(self):
        reduction = rref(self.rep)
        if reduction.rank < self.rep.shape[0]:
            object.__setattr__(self, "rep", reduction.basis())

    @classmethod
    def from_rows(cls, field: PrimeField, rows: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> "RepresentedMatroid":
        return cls(Mat.from_rows(field, rows, col_labels=labels))

    @classmethod
    def from_columns(cls, field: PrimeField, row_labels: Sequence[str], columns: Mapping[str, Sequence[int]]) -> "RepresentedMatroid":
        return cls(Mat.from_columns(field, row_labels, columns))

    @property
    def field(self) -> PrimeField:
        return self.rep.field

    @property
    def ground(self) -> tuple[str, ...]:
        return self.rep.col_labels

    @property
    def rank(self) -> int:
        return self.rep.shape[0]

    @property
    def size(self) -> int:
        return len(self.ground)

    def __len__(self) -> int:
        return self.size

    @cached_property
    def oracle(self) -> RankOracle:
        return RankOracle(self.rep)

    def check_labels(self, labels: Iterable[str]) -> list[str]:
        labels = list(labels)
        unknown = set(labels) - set(self.ground)
        if unknown:
            raise LabelError(f"unknown elements {sorted(unknown)}")
        return labels

    def rank_of(self, labels: Iterable[str]) -> int:
        return self.oracle.rank(self.check_labels(labels))

    # Minors and duality

    def delete(self, labels: Iterable[str]) -> "RepresentedMatroid":
        labels = self.check_labels(labels)
        if not labels:
            return self
        return RepresentedMatroid(self.rep.drop(cols=labels))

    def restrict(self, labels: Iterable[str]) -> "RepresentedMatroid":
        keep = set(self.check_labels(labels))
        return RepresentedMatroid(self.rep.select(cols=[e for e in self.ground if e in keep]))

    def dual(self) -> "RepresentedMatroid":
        return RepresentedMatroid(kernel(self.rep).with_labels(
            row_labels=[f"d{i}" for i in range(self.size - self.rank)]))

    def contract(self, labels: Iterable[str]) -> "RepresentedMatroid":
        """M / X computed as (M* minus X)*."""
        labels = self.check_labels(labels)
        if not labels:
            return self
        return self.dual().delete(labels).dual()

    def contract_by_pivoting(self, labels: Iterable[str]) -> "RepresentedMatroid":
        """M / X by row reduction with the X columns ordered first."""
        labels = self.check_labels(labels)
        if not labels:
            return self
        contracted = set(labels)
        rest = [e for e in self.ground if e not in contracted]
        first = [e for e in self.ground if e in contracted]
        reduction = rref(self.rep.select(cols=first + rest))
        k = self.oracle.rank(first)
        remaining = reduction.matrix.select(rows=reduction.matrix.row_labels[k:reduction.rank], cols=rest)
        return RepresentedMatroid(remaining.with_labels(row_labels=[f"v{i}" for i in range(remaining.shape[0])]))

    # Parallel classes and simplification

    def loops(self) -> list[str]:
        return [e for e, column in self.rep.columns().items() if not any(column)]

    def coloops(self) -> list[str]:
        full = self.oracle.mask(self.ground)
        return [
            e for j, e in enumerate(self.ground)
            if self.oracle.rank_mask(full & ~(1 << j)) < self.rank
        ]

    def parallel_classes(self) -> list[tuple[str, ...]]:
        """Nonloop parallel classes, each sorted, ordered by least label."""
        classes: dict[tuple[int, ...], list[str]] = {}
        for e, column in self.rep.columns().items():
            key = normalize_column(column, self.field)
            if key is not None:
                classes.setdefault(key, []).append(e)
        return sorted((tuple(sorted(c)) for c in classes.values()), key=lambda c: c[0])

    def series_classes(self) -> list[tuple[str, ...]]:
        """Series classes with more than one element (parallel classes of the dual)."""
        return [c for c in self.dual().parallel_classes() if len(c) > 1]

    def simplify(self) -> tuple["RepresentedMatroid", int]:
        """si(M) and epsilon(M); each parallel class keeps its least label."""
        keep = {c[0] for c in self.parallel_classes()}
        simple = RepresentedMatroid(self.rep.select(cols=[e for e in self.ground if e in keep]))
        return simple, len(keep)

    def epsilon(self) -> int:
        return len(self.parallel_classes())

    def is_simple(self) -> bool:
        return self.epsilon() == self.size

    # Relabelling and scaling

    def relabel(self, mapping: Mapping[str, str]) -> "RepresentedMatroid":
        self.check_labels(mapping)
        return RepresentedMatroid(self.rep.relabel_columns(mapping))

    def scale(self, scalars: Mapping[str, int]) -> "RepresentedMatroid":
        self.check_labels(scalars)
        return RepresentedMatroid(self.rep.scale_columns(scalars))

    # Identity

    def row_space(self, order: Sequence[str] | None = None) -> Subspace:
        return Subspace.span(self.rep.select(cols=order if order is not None else self.ground))

    def same_row_space(self, other: "RepresentedMatroid") -> bool:
        """Exact row-space equality over the same labels, no scaling allowed."""
        if set(self.ground) != set(other.ground) or self.field != other.field:
            return False
        order = sorted(self.ground)
        return self.row_space(order) == other.row_space(order)

    @cached_property
    def _key(self) -> tuple:
        order = tuple(sorted(self.ground))
        form = projective_normal_form(self.rep.select(cols=order))
        return self.field.p, order, form.matrix.shape, form.matrix.entries.tobytes()

    def __eq__(self, other):
        if not isinstance(other, RepresentedMatroid):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"RepresentedMatroid(GF({self.field.p}), rank={self.rank}, ground={list(self.ground)})"
