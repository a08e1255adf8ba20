"""Gamma-frame matrices, the extremal function and Dowling geometries.

Standard representations use row labels x1..xt for the projection rows and
b1..bk for the frame rows. Columns are labelled

    b{i}            the unit vector on row b{i}
    g{c}:{i},{j}    -b{i} + c b{j} for i < j and c in Gamma
    {w}@{u}         the frame column w with projection part u (t > 0)
    u{u}            (u, 0) for u a nonzero projective point of GF(p)^t

where u is written as dot-separated residues.
"""

import re
from itertools import product
from math import comb

import numpy as np

from framelab.errors import PreconditionError
from framelab.frames.models import DowlingSpec, FrameClassParams
from framelab.linalg import Mat, SubgroupGamma
from framelab.matroid import RepresentedMatroid


def natural_key(label: str) -> tuple:
    """Sort key that orders embedded integers numerically (b2 before b10)."""
    return tuple(int(part) if part.isdigit() else part for part in re.split(r"(\d+)", label))


def extremal_f(p: int, g: int, t: int, n: int) -> int:
    """Size of the rank-n Dowling geometry with t projection rows over GF(p), |Gamma| = g."""
    if n < t:
        raise PreconditionError(f"f is defined for n >= t, got n = {n}, t = {t}")
    k = n - t
    return p ** t * (g * comb(k, 2) + k) + (p ** t - 1) // (p - 1)


def frame_class_order(a: FrameClassParams, b: FrameClassParams) -> bool:
    """Whether (t, Gamma) precedes (t', Gamma'): p^t |Gamma| <= p^t' |Gamma'|."""
    return a.p ** a.t * a.gamma.order <= b.p ** b.t * b.gamma.order


def _vector_label(u: tuple[int, ...]) -> str:
    return ".".join(str(x) for x in u)


def build_W(n: int, gamma: SubgroupGamma) -> Mat:
    """The standard Gamma-frame matrix whose columns are W(n)."""
    field = gamma.field
    rows = [f"b{i}" for i in range(1, n + 1)]
    columns = {}
    for i in range(1, n + 1):
        column = [0] * n
        column[i - 1] = 1
        columns[f"b{i}"] = column
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for c in gamma:
                column = [0] * n
                column[i - 1] = field.neg(1)
                column[j - 1] = c
                columns[f"g{c}:{i},{j}"] = column
    ordered = {label: columns[label] for label in sorted(columns, key=natural_key)}
    return Mat.from_columns(field, rows, ordered)


def build_Wt(n: int, params: FrameClassParams) -> Mat:
    """Standard representation of the rank-n Dowling geometry with t projection rows."""
    t = params.t
    if n < t:
        raise PreconditionError(f"rank {n} is below t = {t}")
    field = params.field
    frame = build_W(n - t, params.gamma)
    x_rows = [f"x{i}" for i in range(1, t + 1)]
    rows = x_rows + list(frame.row_labels)
    columns = {}
    for label, w in frame.columns().items():
        for u in product(range(field.p), repeat=t):
            columns[f"{label}@{_vector_label(u)}" if t else label] = list(u) + list(w)
    for u in field.projective_points(t):
        columns[f"u{_vector_label(u)}"] = list(u) + [0] * (n - t)
    if not columns:
        return Mat.zeros(field, rows, ())
    return Mat.from_columns(field, rows, columns)


def dowling(spec: DowlingSpec) -> RepresentedMatroid:
    """DG(n, Gamma)^t, or its x- or box-extension by a column labelled w."""
    a = build_Wt(spec.n, spec.params)
    if spec.variant == "plain":
        return RepresentedMatroid(a)
    field = spec.params.field
    t = spec.params.t
    w = np.zeros(spec.n, dtype=np.int64)
    if spec.variant == "x-extension":
        w[t] = field.neg(1)
        w[t + 1] = spec.x
    else:
        w[t:t + 3] = 1
    extra = Mat(field, a.row_labels, ("w",), w.reshape(-1, 1))
    return RepresentedMatroid(a.hstack(extra))


def _frame_scale(column: np.ndarray, gamma: SubgroupGamma) -> int | None:
    """Scalar taking a column to exact frame form, or None if no scalar does."""
    field = gamma.field
    support = np.flatnonzero(column)
    if support.size == 0:
        return 1
    if support.size == 1:
        return field.inv(int(column[support[0]]))
    if support.size > 2:
        return None
    alpha, beta = int(column[support[0]]), int(column[support[1]])
    if field.neg(beta * field.inv(alpha)) not in gamma:
        return None
    return field.neg(field.inv(alpha))


def is_frame_matrix_up_to_scaling(m: Mat, gamma: SubgroupGamma) -> dict[str, int] | None:
    """Column scalars that turn m into an exact Gamma-frame matrix, or None.

    Weight-two columns are scaled so that their upper entry becomes -1.
    """
    witness = {}
    for j, label in enumerate(m.col_labels):
        scale = _frame_scale(m.entries[:, j], gamma)
        if scale is None:
            return None
        witness[label] = scale
    return witness


def is_frame_matrix(m: Mat, gamma: SubgroupGamma) -> bool:
    """Every column is zero, a unit vector, or c e_j - e_i with c in Gamma."""
    minus_one = gamma.field.neg(1)
    for j in range(m.shape[1]):
        column = m.entries[:, j]
        support = np.flatnonzero(column)
        values = [int(column[i]) for i in support]
        if len(values) == 0 or values == [1]:
            continue
        if len(values) != 2:
            return False
        a, b = values
        if not ((a == minus_one and b in gamma) or (b == minus_one and a in gamma)):
            return False
    return True
