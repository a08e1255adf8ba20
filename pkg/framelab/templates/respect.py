"""Respecting and conforming matrices of a frame template."""

import logging
from collections.abc import Sequence

import numpy as np

from framelab.errors import LabelError, PreconditionError
from framelab.frames.dowling import is_frame_matrix
from framelab.linalg import Mat
from framelab.matroid import RepresentedMatroid
from framelab.templates.models import FrameTemplate, RespectWitness, ShiftMatrix

logger = logging.getLogger(__name__)


def complexity(phi: FrameTemplate) -> int:
    return len(phi.X) + len(phi.Y0) + len(phi.Y1) + len(phi.C)


def _is_unit(column: np.ndarray) -> bool:
    support = np.flatnonzero(column)
    return support.size == 1 and int(column[support[0]]) == 1


def check_respect(a: Mat, phi: FrameTemplate, z: Sequence[str]) -> RespectWitness | None:
    """The witness for a given Z, or None when some condition fails."""
    if not set(phi.X) <= set(a.row_labels) or not set(phi.cy) <= set(a.col_labels):
        return None
    if a.field != phi.field:
        return None
    if a.select(rows=phi.X, cols=phi.cy) != phi.a1:
        return None
    z = tuple(z)
    cy = set(phi.cy)
    if cy & set(z) or not set(z) <= set(a.col_labels):
        return None
    b_rows = [r for r in a.row_labels if r not in set(phi.X)]
    lower = a.select(rows=b_rows)
    upper = a.select(rows=phi.X)
    for label in z:
        if any(upper.column(label)):
            return None
        if not _is_unit(lower.entries[:, lower.col_index(label)]):
            return None
    for row in lower.select(cols=phi.cy).to_lists():
        if not phi.delta.contains(row):
            return None
    rest = [c for c in a.col_labels if c not in cy and c not in set(z)]
    for label in rest:
        if not phi.lam.contains(upper.column(label)):
            return None
    if not is_frame_matrix(lower.select(cols=rest), phi.gamma):
        return None
    return RespectWitness(
        rows=a.row_labels,
        cols=a.col_labels,
        z=tuple(c for c in a.col_labels if c in set(z)),
        template_cols=tuple(c for c in a.col_labels if c in cy),
        frame_cols=tuple(rest),
    )


def respects(a: Mat, phi: FrameTemplate) -> RespectWitness | None:
    """A witness that a respects phi, with the least valid Z; None when there is none.

    A column that may go into Z (zero on X, unit below) may always stay a
    frame column instead, so Z is nonempty only for columns that cannot.
    """
    if not set(phi.X) <= set(a.row_labels) or not set(phi.cy) <= set(a.col_labels):
        return None
    b_rows = [r for r in a.row_labels if r not in set(phi.X)]
    upper = a.select(rows=phi.X)
    lower = a.select(rows=b_rows)
    candidates, forced = [], []
    for label in a.col_labels:
        if label in set(phi.cy):
            continue
        x_part = upper.column(label)
        z_ok = not any(x_part) and _is_unit(lower.entries[:, lower.col_index(label)])
        frame_ok = phi.lam.contains(x_part) and is_frame_matrix(lower.select(cols=[label]), phi.gamma)
        if z_ok:
            candidates.append(label)
        if not frame_ok:
            if not z_ok:
                return None
            forced.append(label)
    witness = check_respect(a, phi, forced)
    if witness is not None:
        witness.z_candidates = tuple(candidates)
    return witness


def conforming_matroid(a: Mat, s: ShiftMatrix, phi: FrameTemplate) -> RepresentedMatroid:
    """M(AS) / C minus Y1, for a respecting with Z the shifted columns of s."""
    if set(s.E) != set(a.col_labels):
        raise LabelError("the shift matrix and the matrix have different column labels")
    outside = sorted(set(s.assignment.values()) - set(phi.Y1))
    if outside:
        raise PreconditionError(f"shifts must come from Y1, got {outside}")
    if check_respect(a, phi, s.Z) is None:
        raise PreconditionError(f"the matrix does not respect the template with Z = {list(s.Z)}")
    shifted = s.apply(a.select(cols=s.E)).select(cols=a.col_labels)
    m = RepresentedMatroid(shifted).contract(phi.C).delete(phi.Y1)
    logger.debug("conforming matroid of rank %d on %d elements", m.rank, m.size)
    return m
