"""Constructive minor certificates for Dowling-geometry extensions.

Both constructions run on a working copy of the host representation. Row
operations and pivot contractions are applied to that copy, and columns are
looked up by their projective class in the current coordinates, so the final
map from pattern labels to host labels comes straight from the coordinates.
The certificate itself is replayed on the untouched host to compute column
scalings.
"""

import logging
from collections.abc import Mapping

import numpy as np

from framelab.errors import LabelError, PreconditionError
from framelab.frames.dowling import build_Wt, dowling
from framelab.frames.models import DowlingSpec, FrameClassParams, TaggedCertificate
from framelab.linalg import Mat, SubgroupGamma, projectively_equivalent, row_transform
from framelab.matroid import MinorCertificate, RepresentedMatroid, normalize_column

logger = logging.getLogger(__name__)


class _Workspace:
    """Mutable coordinates of a host representation during a construction."""

    def __init__(self, h: Mat):
        self.field = h.field
        self.rows = list(h.row_labels)
        self.cols = list(h.col_labels)
        self.data = h.entries.copy()
        self.contracted: list[str] = []
        self._index: dict[tuple[int, ...], str] | None = None

    def value(self, row: str, col: str) -> int:
        return int(self.data[self.rows.index(row), self.cols.index(col)])

    def column(self, col: str) -> dict[str, int]:
        j = self.cols.index(col)
        return {r: int(self.data[i, j]) for i, r in enumerate(self.rows) if self.data[i, j]}

    def add_row(self, target: str, source: str, factor: int):
        t, s = self.rows.index(target), self.rows.index(source)
        self.data[t] = (self.data[t] + factor * self.data[s]) % self.field.p
        self._index = None

    def scale_row(self, row: str, factor: int):
        i = self.rows.index(row)
        self.data[i] = (self.data[i] * factor) % self.field.p
        self._index = None

    def contract(self, col: str, pivot_row: str | None = None):
        """Contract col by pivoting on pivot_row (default: first row meeting col)."""
        j = self.cols.index(col)
        if pivot_row is None:
            nz = np.flatnonzero(self.data[:, j])
            if nz.size == 0:
                raise PreconditionError(f"{col} is a loop")
            i = int(nz[0])
        else:
            i = self.rows.index(pivot_row)
        p = self.field.p
        factors = (self.data[:, j] * self.field.inv(int(self.data[i, j]))) % p
        factors[i] = 0
        self.data = (self.data - np.outer(factors, self.data[i])) % p
        self.data = np.delete(np.delete(self.data, i, axis=0), j, axis=1)
        del self.rows[i]
        del self.cols[j]
        self.contracted.append(col)
        self._index = None

    def find(self, vector: Mapping[str, int]) -> str:
        """Least label of a column parallel to vector (given on current rows)."""
        if self._index is None:
            self._index = {}
            for j, label in enumerate(self.cols):
                key = normalize_column(self.data[:, j].tolist(), self.field)
                if key is not None and (key not in self._index or label < self._index[key]):
                    self._index[key] = label
        key = normalize_column([vector.get(r, 0) for r in self.rows], self.field)
        if key is None or key not in self._index:
            raise AssertionError(f"no column parallel to {dict(vector)}")
        return self._index[key]

    def unit(self, row: str) -> str:
        return self.find({row: 1})


def _pattern_map(work: _Workspace, pattern: RepresentedMatroid, row_map: Mapping[str, str]) -> dict[str, str]:
    mapping = {}
    for label, column in pattern.rep.columns().items():
        vector = {row_map[r]: v for r, v in zip(pattern.rep.row_labels, column) if v}
        mapping[label] = work.find(vector)
    return mapping


def _replay(host: RepresentedMatroid, pattern: RepresentedMatroid, contract: list[str], mapping: dict[str, str]) -> MinorCertificate:
    image = set(mapping.values())
    contract_set = set(contract)
    delete = tuple(e for e in host.ground if e not in image and e not in contract_set)
    minor = host.contract(contract).delete(delete).relabel({h: q for q, h in mapping.items()})
    scalings = projectively_equivalent(pattern.rep, minor.rep)
    if scalings is None:
        raise AssertionError("constructed minor is not projectively equivalent to the pattern")
    return MinorCertificate(tuple(contract), delete, dict(mapping), scalings, "represented")


def _gamma_step(gamma: SubgroupGamma) -> int:
    """Some c in Gamma with c != -1 and 1 + c outside Gamma (exists when Gamma is proper)."""
    p = gamma.field.p
    for c in gamma:
        if c != p - 1 and (1 + c) % p not in gamma and (1 + c) % p:
            return c
    raise PreconditionError("Gamma contains every nonzero residue")


def primesubfield_minor(n: int, gamma: SubgroupGamma) -> TaggedCertificate:
    """A DG^(x)(n, Gamma)-minor of the box extension DG^box(n+1, Gamma) for some x outside Gamma."""
    if gamma.is_full():
        raise PreconditionError("Gamma is the whole multiplicative group")
    if n < 2:
        raise PreconditionError(f"the x-extension needs rank at least 2, got {n}")
    field = gamma.field
    p = field.p
    params = FrameClassParams(gamma, 0)
    host = dowling(DowlingSpec(params, n + 1, "box"))
    work = _Workspace(host.rep)
    if field.neg(1) not in gamma:
        work.contract(work.unit("b1"))
        x = field.neg(1)
        branch = "minus-one-outside"
    else:
        c = _gamma_step(gamma)
        work.contract(work.find({"b1": 1, "b2": field.neg(c)}), pivot_row="b1")
        x = field.neg(field.inv((1 + c) % p))
        branch = f"gamma={c}"
    pattern = dowling(DowlingSpec(params, n, "x-extension", x))
    row_map = {f"b{k}": f"b{k + 1}" for k in range(1, n + 1)}
    mapping = _pattern_map(work, pattern, row_map)
    certificate = _replay(host, pattern, work.contracted, mapping)
    logger.info("prime-subfield minor: x = %d via %s", x, branch)
    return TaggedCertificate("x-extension", x, host, pattern, certificate, branch)


def dowling_extension(params: FrameClassParams, n: int, w: Mapping[str, int], label: str = "e") -> RepresentedMatroid:
    """DG(n, Gamma)^t in standard form extended by one column given on its row labels."""
    a = build_Wt(n, params)
    unknown = set(w) - set(a.row_labels)
    if unknown:
        raise LabelError(f"unknown rows {sorted(unknown)}")
    column = Mat(params.field, a.row_labels, (label,), [[w.get(r, 0)] for r in a.row_labels])
    return RepresentedMatroid(a.hstack(column))


def _standard_workspace(extension: RepresentedMatroid, params: FrameClassParams) -> tuple[_Workspace, str]:
    """Coordinates in which the Dowling part of the extension is the standard matrix."""
    n = extension.rank
    std = build_Wt(n, params)
    missing = set(std.col_labels) - set(extension.ground)
    extra = [e for e in extension.ground if e not in set(std.col_labels)]
    if missing or len(extra) != 1:
        raise LabelError("the extension must carry the standard Dowling labels plus one extra element")
    e = extra[0]
    if not extension.is_simple():
        raise PreconditionError("the extension is not simple; its extra column is parallel to an existing one")
    base = extension.rep.select(cols=std.col_labels)
    scaling = projectively_equivalent(std, base)
    if scaling is None:
        raise PreconditionError("deleting the extra element does not leave the standard Dowling geometry")
    transform = row_transform(base.scale_columns(scaling), std)
    w = transform @ extension.rep.select(cols=[e])
    return _Workspace(std.hstack(w.with_labels(row_labels=std.row_labels))), e


def dowling_extension_minor(extension: RepresentedMatroid, m: int, params: FrameClassParams) -> TaggedCertificate:
    """Find DG^(x)(m, Gamma)^t (x outside Gamma) or DG^box(m, Gamma)^t as a minor.

    extension must be a simple rank-n matroid made of the standard DG(n, Gamma)^t
    labels plus one extra element, with n >= p^2 m + t + 3.
    """
    field = params.field
    p, t = field.p, params.t
    n = extension.rank
    if n < p * p * m + t + 3:
        raise PreconditionError(f"rank {n} is below p^2 m + t + 3 = {p * p * m + t + 3}")
    if m - t < 2:
        raise PreconditionError(f"target rank {m} leaves fewer than two frame rows")
    gamma = params.gamma
    work, e = _standard_workspace(extension, params)
    x_rows = [f"x{i}" for i in range(1, t + 1)]
    b_rows = [r for r in work.rows if r not in x_rows]

    w = work.column(e)
    support = [r for r in b_rows if r in w]
    r0 = support[0]
    for xr in x_rows:
        if xr in w:
            work.add_row(xr, r0, field.neg(w[xr] * field.inv(w[r0])))
    w = work.column(e)

    if len(support) == 2:
        i, j = support
        x = field.neg(w[j] * field.inv(w[i]))
        block = [i, j] + [r for r in b_rows if r not in (i, j)][: m - t - 2]
        for r in b_rows:
            if r not in block:
                work.contract(work.unit(r))
        return _finish(extension, work, params, m, "x-extension", x, block, "weight-2")

    rho = support[:3]
    others = [r for r in b_rows if r not in rho]
    s = m - t - 2
    by_value: dict[int, list[str]] = {}
    for r in others:
        by_value.setdefault(w.get(r, 0), []).append(r)
    value = next(v for v in sorted(by_value) if len(by_value[v]) >= p * s)
    chosen = by_value[value][: p * s]
    blocks = [chosen[k * s:(k + 1) * s] for k in range(p)]
    for k in range(1, p):
        for a, c in zip(blocks[k], blocks[0]):
            work.contract(work.find({a: field.neg(1), c: 1}), pivot_row=a)
    keep = set(rho) | set(blocks[0])
    for r in [r for r in b_rows if r in work.rows and r not in keep]:
        work.contract(work.unit(r))

    beta = [work.value(r, e) * field.neg(field.inv(work.value(rho[0], e))) % p for r in rho]
    if beta[1] not in gamma:
        work.contract(work.unit(rho[2]))
        return _finish(extension, work, params, m, "x-extension", beta[1], [rho[0], rho[1]] + blocks[0], "beta1")
    if beta[2] not in gamma:
        work.contract(work.unit(rho[1]))
        return _finish(extension, work, params, m, "x-extension", beta[2], [rho[0], rho[2]] + blocks[0], "beta2")

    # Row scalings by elements of Gamma keep the Dowling columns; w becomes -1, 1, 1.
    work.scale_row(rho[1], field.inv(beta[1]))
    work.scale_row(rho[2], field.inv(beta[2]))
    if field.neg(1) not in gamma:
        work.contract(work.unit(rho[0]))
        return _finish(extension, work, params, m, "x-extension", field.neg(1), [rho[1], rho[2]] + blocks[0], "minus-one")
    work.scale_row(rho[0], field.neg(1))
    if gamma.is_full():
        if not blocks[0]:
            raise PreconditionError("the box outcome needs m - t >= 3")
        work.contract(work.unit(blocks[0][0]))
        return _finish(extension, work, params, m, "box", None, list(rho) + blocks[0][1:], "box")
    c = _gamma_step(gamma)
    work.contract(work.find({rho[0]: 1, rho[1]: field.neg(c)}), pivot_row=rho[0])
    x = field.neg(field.inv((1 + c) % p))
    return _finish(extension, work, params, m, "x-extension", x, [rho[1], rho[2]] + blocks[0], f"gamma={c}")


def _finish(
    extension: RepresentedMatroid,
    work: _Workspace,
    params: FrameClassParams,
    m: int,
    variant: str,
    x: int | None,
    frame_rows: list[str],
    branch: str,
) -> TaggedCertificate:
    pattern = dowling(DowlingSpec(params, m, variant, x))
    row_map = {f"x{i}": f"x{i}" for i in range(1, params.t + 1)}
    row_map.update({f"b{k}": r for k, r in enumerate(frame_rows, start=1)})
    mapping = _pattern_map(work, pattern, row_map)
    certificate = _replay(extension, pattern, work.contracted, mapping)
    logger.info("Dowling extension minor: %s (%s)", variant, branch)
    return TaggedCertificate(variant, x, extension, pattern, certificate, branch)
