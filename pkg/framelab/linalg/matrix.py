"""Dense labelled matrices over GF(p).

Entries are int64 residues held in a read-only numpy array. Row reduction
over GF(2) packs each row into a Python int and works with XOR; every other
prime goes through the vectorised numpy elimination.
"""

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from framelab.errors import FormatError, LabelError, PreconditionError
from framelab.linalg.field import PrimeField


def _check_unique(labels: tuple[str, ...], axis: str):
    if len(set(labels)) != len(labels):
        seen = set()
        dupes = sorted({x for x in labels if x in seen or seen.add(x)})
        raise LabelError(f"duplicate {axis} labels: {dupes}")


@dataclass(frozen=True, eq=False)
class Mat:
    """A |B| x |E| matrix over GF(p) with labelled rows and columns."""
    field: PrimeField
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    entries: np.ndarray

    def __post_init__(self):
        rows = tuple(str(x) for x in self.row_labels)
        cols = tuple(str(x) for x in self.col_labels)
        _check_unique(rows, "row")
        _check_unique(cols, "column")
        try:
            entries = np.array(self.entries, dtype=np.int64).reshape(len(rows), len(cols))
        except ValueError as e:
            raise FormatError(f"entries do not fit a {len(rows)}x{len(cols)} matrix: {e}") from e
        entries %= self.field.p
        entries.setflags(write=False)
        object.__setattr__(self, "row_labels", rows)
        object.__setattr__(self, "col_labels", cols)
        object.__setattr__(self, "entries", entries)

    # Construction

    @classmethod
    def from_rows(
        cls,
        field: PrimeField,
        rows: Sequence[Sequence[int]],
        row_labels: Sequence[str] | None = None,
        col_labels: Sequence[str] | None = None,
    ) -> "Mat":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else len(col_labels or ())
        if row_labels is None:
            row_labels = [f"r{i}" for i in range(nrows)]
        if col_labels is None:
            col_labels = [f"e{j}" for j in range(ncols)]
        return cls(field, tuple(row_labels), tuple(col_labels), np.array(rows, dtype=np.int64))

    @classmethod
    def from_columns(
        cls,
        field: PrimeField,
        row_labels: Sequence[str],
        columns: Mapping[str, Sequence[int]],
    ) -> "Mat":
        labels = tuple(columns)
        data = np.zeros((len(row_labels), len(labels)), dtype=np.int64)
        for j, label in enumerate(labels):
            data[:, j] = columns[label]
        return cls(field, tuple(row_labels), labels, data)

    @classmethod
    def zeros(cls, field: PrimeField, row_labels: Sequence[str], col_labels: Sequence[str]) -> "Mat":
        return cls(field, tuple(row_labels), tuple(col_labels), np.zeros((len(row_labels), len(col_labels))))

    @classmethod
    def identity(cls, field: PrimeField, labels: Sequence[str], col_labels: Sequence[str] | None = None) -> "Mat":
        return cls(field, tuple(labels), tuple(col_labels or labels), np.eye(len(labels), dtype=np.int64))

    # Shape and access

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    @property
    def p(self) -> int:
        return self.field.p

    def row_index(self, label: str) -> int:
        try:
            return self.row_labels.index(label)
        except ValueError:
            raise LabelError(f"unknown row label {label!r}") from None

    def col_index(self, label: str) -> int:
        try:
            return self.col_labels.index(label)
        except ValueError:
            raise LabelError(f"unknown column label {label!r}") from None

    def column(self, label: str) -> tuple[int, ...]:
        return tuple(int(x) for x in self.entries[:, self.col_index(label)])

    def row(self, label: str) -> tuple[int, ...]:
        return tuple(int(x) for x in self.entries[self.row_index(label)])

    def columns(self) -> dict[str, tuple[int, ...]]:
        return {label: tuple(int(x) for x in self.entries[:, j]) for j, label in enumerate(self.col_labels)}

    def entry(self, row: str, col: str) -> int:
        return int(self.entries[self.row_index(row), self.col_index(col)])

    def to_lists(self) -> list[list[int]]:
        return self.entries.tolist()

    def is_zero(self) -> bool:
        return not self.entries.any()

    # Derived matrices

    def select(self, rows: Iterable[str] | None = None, cols: Iterable[str] | None = None) -> "Mat":
        """Submatrix on the given labels, in the given order."""
        rows = self.row_labels if rows is None else tuple(rows)
        cols = self.col_labels if cols is None else tuple(cols)
        ri = [self.row_index(r) for r in rows]
        ci = [self.col_index(c) for c in cols]
        return Mat(self.field, rows, cols, self.entries[np.ix_(ri, ci)])

    def drop(self, rows: Iterable[str] = (), cols: Iterable[str] = ()) -> "Mat":
        rows, cols = set(rows), set(cols)
        for label in rows:
            self.row_index(label)
        for label in cols:
            self.col_index(label)
        return self.select(
            [r for r in self.row_labels if r not in rows],
            [c for c in self.col_labels if c not in cols],
        )

    def transpose(self) -> "Mat":
        return Mat(self.field, self.col_labels, self.row_labels, self.entries.T)

    def with_labels(self, row_labels: Sequence[str] | None = None, col_labels: Sequence[str] | None = None) -> "Mat":
        return Mat(
            self.field,
            tuple(row_labels) if row_labels is not None else self.row_labels,
            tuple(col_labels) if col_labels is not None else self.col_labels,
            self.entries,
        )

    def relabel_columns(self, mapping: Mapping[str, str]) -> "Mat":
        return self.with_labels(col_labels=[mapping.get(c, c) for c in self.col_labels])

    def hstack(self, other: "Mat") -> "Mat":
        if self.row_labels != other.row_labels:
            raise LabelError("hstack needs identical row labels")
        return Mat(self.field, self.row_labels, self.col_labels + other.col_labels,
                   np.hstack([self.entries, other.entries]))

    def vstack(self, other: "Mat") -> "Mat":
        if self.col_labels != other.col_labels:
            raise LabelError("vstack needs identical column labels")
        return Mat(self.field, self.row_labels + other.row_labels, self.col_labels,
                   np.vstack([self.entries, other.entries]))

    def scale_columns(self, scalars: Mapping[str, int]) -> "Mat":
        factors = np.array([scalars.get(c, 1) for c in self.col_labels], dtype=np.int64)
        if np.any(factors % self.p == 0):
            raise PreconditionError("column scalings must be nonzero")
        return Mat(self.field, self.row_labels, self.col_labels, self.entries * factors[np.newaxis, :])

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.shape[1] != other.shape[0]:
            raise PreconditionError(f"cannot multiply {self.shape} by {other.shape}")
        return Mat(self.field, self.row_labels, other.col_labels, (self.entries @ other.entries) % self.p)

    def __add__(self, other: "Mat") -> "Mat":
        if (self.row_labels, self.col_labels) != (other.row_labels, other.col_labels):
            raise LabelError("matrix sum needs identical labels")
        return Mat(self.field, self.row_labels, self.col_labels, self.entries + other.entries)

    # Reduction

    def rref(self) -> "RowReduction":
        return rref(self)

    @property
    def rank(self) -> int:
        return rref(self).rank

    # Identity

    def key(self) -> tuple:
        return (self.p, self.row_labels, self.col_labels, self.entries.tobytes())

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Mat(GF({self.p}), rows={list(self.row_labels)}, cols={list(self.col_labels)}, entries={self.to_lists()})"


class RowReduction(NamedTuple):
    """Reduced row-echelon form of a matrix with its rank and pivot columns."""
    matrix: Mat
    rank: int
    pivot_cols: tuple[str, ...]

    def basis(self) -> Mat:
        """The nonzero rows, relabelled v0, v1, ..."""
        return Mat(
            self.matrix.field,
            tuple(f"v{i}" for i in range(self.rank)),
            self.matrix.col_labels,
            self.matrix.entries[: self.rank],
        )


def pack_rows(entries: np.ndarray) -> list[int]:
    """Pack each 0/1 row into an int, bit j holding column j."""
    weights = [1 << j for j in range(entries.shape[1])]
    return [sum(w for w, bit in zip(weights, row) if bit) for row in entries.tolist()]


def _rref_gf2(entries: np.ndarray) -> tuple[np.ndarray, list[int]]:
    nrows, ncols = entries.shape
    rows = pack_rows(entries)
    pivots = []
    r = 0
    for j in range(ncols):
        if r == nrows:
            break
        bit = 1 << j
        k = next((i for i in range(r, nrows) if rows[i] & bit), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        for i in range(nrows):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivots.append(j)
        r += 1
    out = np.array([[(row >> j) & 1 for j in range(ncols)] for row in rows], dtype=np.int64)
    return out.reshape(nrows, ncols), pivots


def _rref_modp(entries: np.ndarray, field: PrimeField) -> tuple[np.ndarray, list[int]]:
    p = field.p
    inv = field.inverse_table
    a = entries.copy()
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for j in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, j])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * inv[a[r, j]]) % p
        factors = a[:, j].copy()
        factors[r] = 0
        a = (a - np.outer(factors, a[r])) % p
        pivots.append(j)
        r += 1
    return a, pivots


def rref(m: Mat) -> RowReduction:
    """Reduced row-echelon form; zero rows sink to the bottom, row labels kept by position."""
    if m.p == 2:
        entries, pivots = _rref_gf2(m.entries)
    else:
        entries, pivots = _rref_modp(m.entries, m.field)
    reduced = Mat(m.field, m.row_labels, m.col_labels, entries)
    return RowReduction(reduced, len(pivots), tuple(m.col_labels[j] for j in pivots))


def rref_with_transform(m: Mat) -> tuple[RowReduction, Mat]:
    """rref(m) together with a nonsingular T such that T @ m is that form."""
    aux = tuple(f"~{r}" for r in m.row_labels)
    augmented = m.hstack(Mat.identity(m.field, m.row_labels, aux))
    if m.p == 2:
        entries, pivots = _rref_gf2(augmented.entries)
    else:
        entries, pivots = _rref_modp(augmented.entries, m.field)
    ncols = m.shape[1]
    left = Mat(m.field, m.row_labels, m.col_labels, entries[:, :ncols])
    transform = Mat(m.field, m.row_labels, m.row_labels, entries[:, ncols:])
    own = [j for j in pivots if j < ncols]
    return RowReduction(left, len(own), tuple(m.col_labels[j] for j in own)), transform


def inverse(m: Mat) -> Mat:
    """Inverse of a square matrix; rows of the result are labelled by m's columns."""
    if m.shape[0] != m.shape[1]:
        raise PreconditionError(f"only square matrices have inverses, got {m.shape}")
    reduction, transform = rref_with_transform(m)
    if reduction.rank != m.shape[0]:
        raise PreconditionError("matrix is singular")
    return transform.with_labels(row_labels=m.col_labels, col_labels=m.row_labels)


def kernel(m: Mat) -> Mat:
    """Rows spanning {v : m v = 0}, one per non-pivot column."""
    reduction = rref(m)
    cols = m.col_labels
    pivot_index = [cols.index(c) for c in reduction.pivot_cols]
    free = [j for j in range(len(cols)) if j not in set(pivot_index)]
    r = reduction.matrix.entries
    basis = np.zeros((len(free), len(cols)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, j in enumerate(pivot_index):
            basis[k, j] = -r[i, f]
    return Mat(m.field, tuple(f"k{k}" for k in range(len(free))), cols, basis)


def solve(a: Mat, b: Sequence[int]) -> tuple[int, ...] | None:
    """Some x with a @ x = b, or None when the system is inconsistent."""
    rhs = Mat(a.field, a.row_labels, ("~rhs",), np.array(b, dtype=np.int64).reshape(-1, 1))
    reduction = rref(a.hstack(rhs))
    if "~rhs" in reduction.pivot_cols:
        return None
    x = [0] * a.shape[1]
    entries = reduction.matrix.entries
    for i, label in enumerate(reduction.pivot_cols):
        x[a.col_index(label)] = int(entries[i, -1])
    return tuple(x)


def row_transform(src: Mat, dst: Mat) -> Mat:
    """A nonsingular T with T @ src = dst.

    Both matrices must have the same shape and the same row space.
    """
    if src.shape != dst.shape:
        raise PreconditionError(f"row transform needs equal shapes, got {src.shape} and {dst.shape}")
    red_src, t_src = rref_with_transform(src.with_labels(col_labels=dst.col_labels))
    red_dst, t_dst = rref_with_transform(dst)
    if not np.array_equal(red_src.matrix.entries, red_dst.matrix.entries):
        raise PreconditionError("matrices are not row-equivalent")
    result = inverse(t_dst) @ t_src
    return result.with_labels(row_labels=dst.row_labels, col_labels=src.row_labels)
