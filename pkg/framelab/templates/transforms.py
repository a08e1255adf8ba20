"""Template transformations that leave the class of conforming matroids unchanged."""

import logging
from collections.abc import Sequence

import numpy as np

from framelab.errors import LabelError, PreconditionError
from framelab.linalg import Mat, Subspace, complementary_projection, inverse
from framelab.templates.models import FrameTemplate, FreshLabels

logger = logging.getLogger(__name__)


def _subset(labels: Sequence[str], of: Sequence[str], name: str) -> tuple[str, ...]:
    labels = tuple(labels)
    unknown = set(labels) - set(of)
    if unknown:
        raise LabelError(f"{sorted(unknown)} are not in {name}")
    return tuple(x for x in of if x in set(labels))


def contract_template(phi: FrameTemplate, x_hat: Sequence[str], c_hat: Sequence[str]) -> FrameTemplate:
    """Remove the rows x_hat and the columns c_hat they fully span."""
    x_hat = _subset(x_hat, phi.X, "X")
    c_hat = _subset(c_hat, phi.C, "C")
    if phi.a1.select(rows=x_hat, cols=c_hat).rank != len(x_hat):
        raise PreconditionError("A1[X^, C^] must have rank |X^|")
    x_rest = tuple(x for x in phi.X if x not in set(x_hat))
    if not phi.a1.select(rows=x_rest, cols=c_hat).is_zero():
        raise PreconditionError("A1[X - X^, C^] must be zero")
    if phi.delta.project(c_hat).dim:
        raise PreconditionError("Delta[C^] must be zero")
    c_rest = tuple(c for c in phi.C if c not in set(c_hat))
    cy = phi.Y0 + phi.Y1 + c_rest
    logger.debug("contracting template rows %s with columns %s", x_hat, c_hat)
    return phi.replace(
        C=c_rest,
        X=x_rest,
        a1=phi.a1.select(rows=x_rest, cols=cy),
        delta=phi.delta.project(cy),
        lam=phi.lam.project(x_rest),
    )


def apply_unitary(phi: FrameTemplate, u: Mat) -> FrameTemplate:
    """(U A1, U Lambda) for a nonsingular U on X."""
    if set(u.row_labels) != set(phi.X) or set(u.col_labels) != set(phi.X):
        raise LabelError("U must have rows and columns labelled by X")
    u = u.select(rows=phi.X, cols=phi.X)
    if u.rank != len(phi.X):
        raise PreconditionError("U is singular")
    return phi.replace(a1=u @ phi.a1, lam=phi.lam.apply(u))


def project_delta(phi: FrameTemplate, x1: Sequence[str], complement: Subspace | None = None) -> FrameTemplate:
    """Project Delta along W = rowspace(A1[x1]) onto a complement of W.

    The complement defaults to the span of the unit vectors off the pivots
    of W's reduced basis.
    """
    x1 = _subset(x1, phi.X, "X")
    if phi.lam.project(x1).dim:
        raise PreconditionError("Lambda[X1] must be zero")
    w = Subspace.span(phi.a1.select(rows=x1))
    if w.dim == 0:
        return phi
    v = complement if complement is not None else w.canonical_complement()
    if v.ambient != phi.cy:
        v = v.reorder(phi.cy)
    projected = [complementary_projection(w, v, row) for row in phi.delta.basis.to_lists()]
    return phi.replace(delta=Subspace.from_vectors(phi.field, phi.cy, projected))


def normalize_delta(phi: FrameTemplate, fresh: FreshLabels | None = None) -> FrameTemplate:
    """Move Delta into new rows X^ over new columns C^, leaving Delta = GF(p)^C^ x {0}.

    The rows X^ hold the reduced basis of Delta next to an identity block on
    C^; the old rows get zeros on C^ and Lambda gets zeros on X^.
    """
    d = phi.delta.dim
    if d == 0:
        return phi
    fresh = fresh or FreshLabels(phi.labels)
    x_hat = fresh.block("x", d)
    c_hat = fresh.block("c", d)
    new_x = phi.X + x_hat
    new_c = phi.C + c_hat
    cy = phi.Y0 + phi.Y1 + new_c
    n_old = len(phi.cy)
    entries = np.zeros((len(new_x), len(cy)), dtype=np.int64)
    entries[: len(phi.X), :n_old] = phi.a1.entries
    entries[len(phi.X):, :n_old] = phi.delta.basis.entries
    entries[len(phi.X):, n_old:] = np.eye(d, dtype=np.int64)
    logger.debug("normalising Delta of dimension %d onto %s", d, c_hat)
    return phi.replace(
        C=new_c,
        X=new_x,
        a1=Mat(phi.field, new_x, cy, entries),
        delta=Subspace.coordinates(phi.field, cy, c_hat),
        lam=phi.lam.embed(new_x),
    )


def independent_rows(m: Mat, rows: Sequence[str]) -> tuple[str, ...]:
    """Greedy maximal independent subset of the given rows, in order."""
    kept: list[str] = []
    rank = 0
    for r in rows:
        if m.select(rows=kept + [r]).rank > rank:
            kept.append(r)
            rank += 1
    return tuple(kept)


def prune_rows(phi: FrameTemplate, x1: Sequence[str]) -> FrameTemplate:
    """Drop rows of x1 whose A1-row depends on the earlier rows of x1."""
    x1 = _subset(x1, phi.X, "X")
    if phi.lam.project(x1).dim:
        raise PreconditionError("Lambda[X1] must be zero")
    kept = set(independent_rows(phi.a1, x1))
    x_rest = tuple(x for x in phi.X if x not in set(x1) or x in kept)
    if len(x_rest) == len(phi.X):
        return phi
    return phi.replace(X=x_rest, a1=phi.a1.select(rows=x_rest), lam=phi.lam.project(x_rest))


def coordinate_lambda_unitary(phi: FrameTemplate) -> Mat | None:
    """U with U Lambda spanned by unit vectors at the pivots of Lambda; None if already so."""
    x = phi.X
    pivots = phi.lam.pivots
    if phi.lam == Subspace.coordinates(phi.field, x, pivots):
        return None
    basis = phi.lam.basis.entries
    columns = {}
    for label in x:
        if label in pivots:
            columns[label] = basis[pivots.index(label)].tolist()
        else:
            columns[label] = [1 if r == label else 0 for r in x]
    return inverse(Mat.from_columns(phi.field, x, columns))
