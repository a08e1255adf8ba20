"""Realising a frame matroid with projection rows and extra columns inside a reduced template.

Given a reduced template with dim Lambda = t and dim Delta = d, and a matroid
N = M([P2 over P0]) where P2 has at most t rows and [P1 over P0] is
row-equivalent to a Gamma-frame matrix for some P1 with at most d rows, this
module builds a matrix A respecting the template, a shift matrix S, and a
certificate that N is a minor of M(AS) / C minus Y1.
"""

import logging
from dataclasses import dataclass

import numpy as np

from framelab.errors import LabelError, PreconditionError
from framelab.frames.dowling import is_frame_matrix_up_to_scaling
from framelab.frames.models import ProjectionFrameData
from framelab.frames.projection import check_projection_frame_data
from framelab.linalg import Mat, inverse, row_transform
from framelab.matroid import MinorCertificate, RepresentedMatroid
from framelab.templates.models import FrameTemplate, RespectWitness, ShiftMatrix
from framelab.templates.reduction import is_reduced
from framelab.templates.respect import check_respect, conforming_matroid

logger = logging.getLogger(__name__)

UNIT_COLUMN = "c:z"
UNIT_ROW = "d:z"


@dataclass
class SubclassWitness:
    host: Mat
    shift: ShiftMatrix
    respect: RespectWitness
    matroid: RepresentedMatroid  # M(AS) / C minus Y1
    pattern: RepresentedMatroid  # M([P2 over P0])
    certificate: MinorCertificate

    def validates(self) -> bool:
        return self.certificate.validates(self.matroid, self.pattern)


def _pad_rows(m: Mat, labels: list[str]) -> Mat:
    """m relabelled onto `labels`, with zero rows appended as needed."""
    entries = np.zeros((len(labels), m.shape[1]), dtype=np.int64)
    entries[: m.shape[0]] = m.entries
    return Mat(m.field, labels, m.col_labels, entries)


def subclass_witness(phi: FrameTemplate, data: ProjectionFrameData) -> SubclassWitness:
    if not is_reduced(phi):
        raise PreconditionError("subclass witnesses need a reduced template")
    field = phi.field
    if data.p0.field != field:
        raise PreconditionError(f"the data is over GF({data.p0.p}), the template over GF({field.p})")
    if not check_projection_frame_data(data, phi.gamma):
        raise PreconditionError("[P1 over P0] is not row-equivalent to a Gamma-frame matrix")
    x0, x1 = phi.lambda_partition()
    t, d = len(x0), phi.delta.dim
    if data.p2.shape[0] > t:
        raise PreconditionError(f"{data.p2.shape[0]} projection rows but dim Lambda = {t}")
    if data.p1.shape[0] > d:
        raise PreconditionError(f"{data.p1.shape[0]} extra columns but dim Delta = {d}")

    f_cols = list(data.p0.col_labels)
    b0 = list(data.p0.row_labels)
    r_rows = list(data.p1.row_labels) + [f"r:pad{i}" for i in range(d - data.p1.shape[0])]
    if clash := set(f_cols) & (set(phi.cy) | {UNIT_COLUMN} | {f"z:{y}" for y in phi.Y1}):
        raise LabelError(f"matroid labels {sorted(clash)} clash with template columns")
    row_labels = list(phi.X) + r_rows + b0 + [UNIT_ROW]
    if len(set(row_labels)) != len(row_labels):
        raise LabelError("row labels of the data clash with X")

    p2 = _pad_rows(data.p2, list(x0))
    pattern = RepresentedMatroid(p2.vstack(data.p0))
    p1 = _pad_rows(data.p1, r_rows)
    frame = _pad_rows(data.frame.select(rows=data.p1.row_labels), r_rows).vstack(data.frame.select(rows=b0))
    w = phi.delta.basis.with_labels(row_labels=r_rows)

    # Q = [A1[X1] over W] on the first independent columns, C before Y0 before Y1.
    stacked = phi.a1.select(rows=x1).vstack(w)
    reduction = stacked.select(cols=phi.C + phi.Y0 + phi.Y1).rref()
    if reduction.rank != len(x1) + d:
        raise AssertionError("A1[X1] over W must have independent rows in a reduced template")
    c_hat = reduction.pivot_cols
    c0 = [y for y in phi.Y0 if y in set(c_hat)]
    c1 = [y for y in phi.Y1 if y in set(c_hat)]
    z_cols = [f"z:{y}" for y in c1]

    # P2' = P2 + K[R] P1 with K = A1[X0, C^] Q^-1, so that [P2' | A1[X0, C^]] sits in the right row space.
    if c_hat and x0:
        k = phi.a1.select(rows=x0, cols=c_hat) @ inverse(stacked.select(cols=c_hat))
        p2 = p2 + k.select(cols=r_rows) @ p1
    cols = f_cols + [UNIT_COLUMN] + z_cols + list(phi.cy)
    a = np.zeros((len(row_labels), len(cols)), dtype=np.int64)
    index_r = {r: i for i, r in enumerate(row_labels)}
    nf = len(f_cols)
    cy_start = nf + 1 + len(z_cols)
    for x in phi.X:
        a[index_r[x], cy_start:] = phi.a1.row(x)
    for x in x0:
        a[index_r[x], :nf] = p2.row(x)
    for r in r_rows:
        a[index_r[r], :nf] = p1.row(r)
        a[index_r[r], cy_start:] = w.row(r)
    for b in b0:
        a[index_r[b], :nf] = data.p0.row(b)
    a[index_r[UNIT_ROW], nf:cy_start] = 1
    host = Mat(field, row_labels, cols, a)

    # Scale F to an exact frame and move the rows R + B0 onto it.
    scalings = is_frame_matrix_up_to_scaling(frame, phi.gamma)
    host = host.scale_columns(scalings)
    lower = r_rows + b0
    transform = row_transform(host.select(rows=lower, cols=f_cols), frame.scale_columns(scalings))
    host = host.select(rows=phi.X).vstack(transform @ host.select(rows=lower)).vstack(host.select(rows=[UNIT_ROW]))

    shift = ShiftMatrix(host.col_labels, {f"z:{y}": y for y in c1})
    respect = check_respect(host, phi, shift.Z)
    if respect is None:
        raise AssertionError("the constructed matrix does not respect the template")
    matroid = conforming_matroid(host, shift, phi)
    unscale = {f: field.inv(s) for f, s in scalings.items() if s != 1}
    certificate = MinorCertificate(
        contract=(UNIT_COLUMN, *z_cols, *c0),
        delete=tuple(y for y in phi.Y0 if y not in set(c0)),
        map={f: f for f in f_cols},
        scalings=unscale or None,
        mode="represented",
        notes=[f"t={t}", f"d={d}", f"C^={list(c_hat)}"],
    )
    logger.info("subclass witness with %d frame columns, |C^| = %d, |Z| = %d", nf, len(c_hat), len(z_cols))
    return SubclassWitness(host, shift, respect, matroid, pattern, certificate)
