"""Y-reduced and reduced templates, and the pipeline that reaches them.

Every step is one of the named passes in `framelab.templates.transforms` and
is recorded in a ReductionTrace, so each step can be checked by enumeration
on its own.
"""

import logging

import numpy as np

from framelab.linalg import Mat, Subspace
from framelab.linalg.matrix import rref_with_transform
from framelab.templates.models import FrameTemplate, FreshLabels, ReductionTrace
from framelab.templates.transforms import (
    apply_unitary,
    contract_template,
    coordinate_lambda_unitary,
    independent_rows,
    normalize_delta,
    project_delta,
    prune_rows,
)

logger = logging.getLogger(__name__)


def _lambda_ok(phi: FrameTemplate) -> bool:
    x0, _ = phi.lambda_partition()
    return phi.lam.project(x0).dim == len(x0)


def is_y_reduced(phi: FrameTemplate) -> bool:
    """Delta = GF(p)^C x {0} and Lambda is GF(p)^X0 x {0} for some X0."""
    if phi.delta.project(phi.C).dim != len(phi.C):
        return False
    if phi.delta.project(phi.Y).dim:
        return False
    return _lambda_ok(phi)


def is_reduced(phi: FrameTemplate) -> bool:
    """Delta contains GF(p)^C, Lambda is coordinate on X0, and A1[X1] is a basis skew to Delta with A1[X1, C] = 0."""
    n = len(phi.cy)
    for c in phi.C:
        unit = [0] * n
        unit[phi.cy.index(c)] = 1
        if not phi.delta.contains(unit):
            return False
    if not _lambda_ok(phi):
        return False
    _, x1 = phi.lambda_partition()
    rows = phi.a1.select(rows=x1)
    if not rows.select(cols=phi.C).is_zero():
        return False
    if rows.rank != len(x1):
        return False
    return Subspace.span(rows).is_skew(phi.delta)


def _record(trace: ReductionTrace, name, before: FrameTemplate, after: FrameTemplate, **evidence) -> FrameTemplate:
    if after != before:
        trace.record(name, before, after, **evidence)
        logger.debug("pass %s: %s -> %s", name, before.summary(), after.summary())
    return after


def _unitary(trace: ReductionTrace, phi: FrameTemplate, u: Mat | None, why: str) -> FrameTemplate:
    if u is None or np.array_equal(u.select(rows=phi.X, cols=phi.X).entries, np.eye(len(phi.X), dtype=np.int64)):
        return phi
    return _record(trace, "unitary", phi, apply_unitary(phi, u), step=why)


def y_reduce(phi: FrameTemplate, fresh: FreshLabels | None = None, trace: ReductionTrace | None = None) -> FrameTemplate:
    """An equivalent Y-reduced template."""
    fresh = fresh or FreshLabels(phi.labels)
    trace = trace if trace is not None else ReductionTrace()
    old_c = phi.C
    phi = _record(trace, "normalize-delta", phi, normalize_delta(phi, fresh), dim_delta=phi.delta.dim)

    if old_c:
        reduction, transform = rref_with_transform(phi.a1.select(cols=old_c))
        phi = _unitary(trace, phi, transform.with_labels(col_labels=phi.X), "row-reduce A1 on the original C")
        spanning = phi.X[: reduction.rank]
        phi = _record(trace, "contract", phi, contract_template(phi, spanning, old_c), rows=list(spanning), cols=list(old_c))

    phi = _unitary(trace, phi, coordinate_lambda_unitary(phi), "Lambda onto coordinates")
    return phi


def _triangular_unitary(phi: FrameTemplate, x0: tuple[str, ...], x1: tuple[str, ...]) -> tuple[Mat, tuple[str, ...], tuple[str, ...]]:
    """U with U[X1, X0] = 0 bringing A1 to block form, plus the split (X1', X1'') and pivots C'."""
    field = phi.field
    p = field.p
    reduction, t1 = rref_with_transform(phi.a1.select(rows=x1, cols=phi.C))
    x1_pivot = x1[: reduction.rank]
    pivots = reduction.pivot_cols
    index = {x: i for i, x in enumerate(phi.X)}
    u = np.eye(len(phi.X), dtype=np.int64)
    rows1 = [index[x] for x in x1]
    u[np.ix_(rows1, rows1)] = t1.entries
    # Clear the pivot columns C' from the X0 rows using the rows X1'.
    for x in x0:
        for c, xp in zip(pivots, x1_pivot):
            factor = phi.a1.entry(x, c)
            if factor:
                u[index[x]] = (u[index[x]] - factor * u[index[xp]]) % p
    return Mat(field, phi.X, phi.X, u), x1_pivot, pivots


def reduce(phi: FrameTemplate) -> tuple[FrameTemplate, ReductionTrace]:
    """An equivalent reduced template and the passes that produced it."""
    trace = ReductionTrace()
    if is_reduced(phi):
        return phi, trace
    fresh = FreshLabels(phi.labels)
    phi = y_reduce(phi, fresh, trace)

    x0, x1 = phi.lambda_partition()
    u, x1_pivot, c_pivot = _triangular_unitary(phi, x0, x1)
    phi = _unitary(trace, phi, u, "block-triangularise A1 on C")
    if x1_pivot:
        off_pivot = Subspace.coordinates(phi.field, phi.cy, [c for c in phi.cy if c not in set(c_pivot)])
        phi = _record(trace, "project-delta", phi, project_delta(phi, x1_pivot, off_pivot), rows=list(x1_pivot), complement="zero on C'")
        phi = _record(trace, "contract", phi, contract_template(phi, x1_pivot, c_pivot), rows=list(x1_pivot), cols=list(c_pivot))

    _, x1 = phi.lambda_partition()
    if x1:
        phi = _record(trace, "project-delta", phi, project_delta(phi, x1), rows=list(x1), complement="canonical")
        kept = independent_rows(phi.a1, x1)
        phi = _record(trace, "prune", phi, prune_rows(phi, x1), kept=list(kept))

    trace.fresh_counter = fresh.counter
    if not is_reduced(phi):
        raise AssertionError("reduction pipeline ended on a template that is not reduced")
    logger.info("reduced template in %d passes", len(trace))
    return phi, trace
