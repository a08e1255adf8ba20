"""One deletion or contraction inside the stacked [P over Q] form."""

import logging
from typing import Literal

import numpy as np

from framelab.errors import PreconditionError
from framelab.frames.dowling import is_frame_matrix_up_to_scaling
from framelab.frames.models import StackedFrameRep
from framelab.linalg import Mat

logger = logging.getLogger(__name__)


def _eliminate(entries: np.ndarray, pivot_row: np.ndarray, j: int, p: int, inverse: int) -> np.ndarray:
    """Clear column j of every row of `entries` using pivot_row (pivot_row[j] * inverse = 1)."""
    factors = (entries[:, j] * inverse) % p
    return (entries - np.outer(factors, pivot_row)) % p


def frame_minor_step(rep: StackedFrameRep, e: str, op: Literal["delete", "contract"]) -> StackedFrameRep:
    """Delete or contract e while staying in stacked form with at most as many P rows.

    With Q[e] = 0 the contraction pivots inside P and drops a P row. Otherwise
    P[e] is cleared with the first Q row meeting e, that row is dropped, and the
    remaining frame rows are rescaled column by column to exact frame form.
    """
    if op == "delete":
        return StackedFrameRep(rep.projection.drop(cols=[e]), rep.frame.drop(cols=[e]), rep.gamma)
    if op != "contract":
        raise PreconditionError(f"unknown minor operation {op!r}")

    field = rep.gamma.field
    p = field.p
    j = rep.frame.col_index(e)
    P, Q = rep.projection.entries, rep.frame.entries
    q_rows = np.flatnonzero(Q[:, j])
    if q_rows.size == 0:
        p_rows = np.flatnonzero(P[:, j])
        if p_rows.size == 0:
            raise PreconditionError(f"{e} is a loop and cannot be contracted")
        i = int(p_rows[0])
        P = _eliminate(P, P[i].copy(), j, p, field.inv(int(P[i, j])))
        projection = Mat(field, rep.projection.row_labels, rep.projection.col_labels, P)
        projection = projection.drop(rows=[rep.projection.row_labels[i]], cols=[e])
        logger.debug("contracted %s inside the projection rows", e)
        return StackedFrameRep(projection, rep.frame.drop(cols=[e]), rep.gamma)

    i = int(q_rows[0])
    pivot = Q[i].copy()
    inverse = field.inv(int(Q[i, j]))
    P = _eliminate(P, pivot, j, p, inverse)
    Q = _eliminate(Q, pivot, j, p, inverse)
    projection = Mat(field, rep.projection.row_labels, rep.projection.col_labels, P).drop(cols=[e])
    frame = Mat(field, rep.frame.row_labels, rep.frame.col_labels, Q)
    frame = frame.drop(rows=[rep.frame.row_labels[i]], cols=[e])
    scalings = is_frame_matrix_up_to_scaling(frame, rep.gamma)
    if scalings is None:
        raise AssertionError("contracting a frame column must leave a frame matrix")
    logger.debug("contracted %s through frame row %s", e, rep.frame.row_labels[i])
    return StackedFrameRep(projection.scale_columns(scalings), frame.scale_columns(scalings), rep.gamma)
