from collections.abc import Sequence

import numpy as np

from framelab.errors import LabelError, PreconditionError
from framelab.frames.dowling import is_frame_matrix_up_to_scaling
from framelab.frames.models import ProjectionFrameData
from framelab.linalg import Mat, SubgroupGamma, row_transform


def projection_frame_data(a: Mat, x_rows: Sequence[str], extra_cols: Sequence[str], gamma: SubgroupGamma) -> ProjectionFrameData:
    """Split A into projection rows and a frame part absorbing the extra columns.

    A has rows B + X; A[B, E - R] must be a Gamma-frame matrix (up to column
    scaling), where R = extra_cols. The frame matrix is A[B, E - R] with an
    identity block on R appended as new rows r:{label}. Adding multiples of
    those rows to B gives [P1 over P0] with P0 = A[B], so M([P2 over P0]) is
    M(A) with P2 = A[X].
    """
    x_rows = list(x_rows)
    extra = list(extra_cols)
    for r in x_rows:
        a.row_index(r)
    for c in extra:
        a.col_index(c)
    b_rows = [r for r in a.row_labels if r not in set(x_rows)]
    plain = [c for c in a.col_labels if c not in set(extra)]
    if is_frame_matrix_up_to_scaling(a.select(rows=b_rows, cols=plain), gamma) is None:
        raise PreconditionError("the rows outside X are not a Gamma-frame matrix off the extra columns")

    r_rows = [f"r:{c}" for c in extra]
    if set(r_rows) & set(a.row_labels):
        raise LabelError("row labels clash with the generated r:{label} rows")
    field = a.field
    frame = np.zeros((len(b_rows) + len(extra), len(a.col_labels)), dtype=np.int64)
    p1 = np.zeros((len(extra), len(a.col_labels)), dtype=np.int64)
    b_part = a.select(rows=b_rows).entries
    for j, label in enumerate(a.col_labels):
        if label in extra:
            k = extra.index(label)
            frame[len(b_rows) + k, j] = 1
            p1[k, j] = 1
        else:
            frame[: len(b_rows), j] = b_part[:, j]
    return ProjectionFrameData(
        p2=a.select(rows=x_rows),
        p0=a.select(rows=b_rows),
        p1=Mat(field, r_rows, a.col_labels, p1),
        frame=Mat(field, b_rows + r_rows, a.col_labels, frame),
    )


def check_projection_frame_data(data: ProjectionFrameData, gamma: SubgroupGamma) -> bool:
    """[P1 over P0] is row-equivalent to the frame matrix, and that matrix is Gamma-frame."""
    if is_frame_matrix_up_to_scaling(data.frame, gamma) is None:
        return False
    stacked = data.p1.vstack(data.p0)
    try:
        row_transform(stacked, data.frame.select(rows=stacked.row_labels))
    except PreconditionError:
        return False
    return True
