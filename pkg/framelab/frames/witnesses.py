"""Replays of the explicit constructions that place small geometries in or out of frame classes.

Each report records computed values next to the values the construction is
expected to produce. Identification with AG or PG uses the counting argument
(a simple affine restriction with p^(r-1) points is AG(r-1, p); a simple
rank-r matroid with (p^r - 1)/(p - 1) points is PG(r-1, p)) and, for small
cases, the isomorphism search as well.
"""

import logging
from collections.abc import Mapping, Sequence
from itertools import product

from framelab.errors import PreconditionError, ResourceLimitError
from framelab.frames.dowling import dowling, extremal_f, is_frame_matrix_up_to_scaling
from framelab.frames.geometry import ag, pg
from framelab.frames.models import DowlingSpec, FrameClassParams, StackedFrameRep, WitnessReport
from framelab.linalg import GF, Mat, PrimeField, SubgroupGamma
from framelab.matroid import RepresentedMatroid, is_affine_restriction, is_isomorphic, max_line_size

logger = logging.getLogger(__name__)

MAX_WITNESS_T = 2
ISO_ORACLE_LIMIT = 27

# Transcribed frame matrix. Its third and sixth columns coincide; TECHTHREE_Q
# swaps in the sixth column that completes the nine points of AG(2,3).
TECHTHREE_Q_TRANSCRIBED = (
    (0, 0, 0, 0, 0, 0, 0, 1, 1),
    (1, 0, 1, 1, 1, 1, 0, 0, 0),
    (0, 1, 0, 1, 0, 0, 1, 0, 0),
    (0, 0, 2, 0, 1, 2, 1, 1, 2),
)
TECHTHREE_Q = (
    (0, 0, 0, 0, 0, 0, 0, 1, 1),
    (1, 0, 1, 1, 1, 0, 0, 0, 0),
    (0, 1, 0, 1, 0, 1, 1, 0, 0),
    (0, 0, 2, 0, 1, 2, 1, 1, 2),
)


def _check_t(t: int):
    if t < 0:
        raise PreconditionError(f"t must be nonnegative, got {t}")
    if t > MAX_WITNESS_T:
        raise ResourceLimitError(f"witness replays are capped at t = {MAX_WITNESS_T}, got {t}")


def _lift(field: PrimeField, t: int, base_rows: Sequence[str], columns: Mapping[str, Sequence[int]]) -> Mat:
    """Columns (u, c) for every u in GF(p)^t and every given column c."""
    rows = [f"x{i}" for i in range(1, t + 1)] + list(base_rows)
    lifted = {}
    for label, column in columns.items():
        for u in product(range(field.p), repeat=t):
            suffix = "@" + ".".join(map(str, u)) if t else ""
            lifted[label + suffix] = list(u) + list(column)
    return Mat.from_columns(field, rows, lifted)


def _all_vectors(field: PrimeField, rows: Sequence[str], keep) -> Mat:
    columns = {
        "v" + ".".join(map(str, v)): list(v)
        for v in product(range(field.p), repeat=len(rows))
        if any(v) and keep(v)
    }
    return Mat.from_columns(field, rows, columns)


def _is_affine_geometry(m: RepresentedMatroid) -> bool:
    p = m.field.p
    return m.is_simple() and m.rank >= 1 and m.size == p ** (m.rank - 1) and is_affine_restriction(m)


def _is_projective_geometry(m: RepresentedMatroid) -> bool:
    p = m.field.p
    return m.is_simple() and m.size == (p ** m.rank - 1) // (p - 1)


def _identify(report: WitnessReport, name: str, m: RepresentedMatroid, kind: str, dim: int):
    """Record the size, rank and identification of m with AG(dim, p) or PG(dim, p)."""
    p = m.field.p
    target = ag(dim, p) if kind == "ag" else pg(dim, p)
    report.check(f"{name}.size", m.size, target.size)
    report.check(f"{name}.rank", m.rank, target.rank)
    structural = _is_affine_geometry(m) if kind == "ag" else _is_projective_geometry(m)
    report.check(f"{name}.is_{kind}({dim},{p})", structural, True)
    if m.size <= ISO_ORACLE_LIMIT:
        report.check(f"{name}.isomorphism_search", is_isomorphic(m, target) is not None, True)


def witness_techtwo(t: int) -> WitnessReport:
    """AG(t+3,2) and PG(t+2,2) against the binary frame class with t projection rows."""
    _check_t(t)
    field = GF(2)
    report = WitnessReport(
        claim=f"PG({t + 2},2) and AG({t + 3},2) are not in G({{1}})^{t}; "
              f"AG({t + 3},2) is a minor of a box extension and lies in G({{1}})^{t + 1}",
    )
    f = extremal_f(2, 1, t, t + 3)
    report.check("f(2,1,t,t+3)", f, 7 * 2 ** t - 1)
    report.check("|PG(t+2,2)| > f(2,1,t,t+3)", 2 ** (t + 3) - 1 > f, True)

    # Incidence columns of K_{2,4} with sides {1,2,3,4} and {5,6}; w marks the larger side.
    graph_rows = [f"v{i}" for i in range(1, 7)]
    edges = {}
    for i in range(1, 5):
        for j in (5, 6):
            column = [0] * 6
            column[i - 1] = column[j - 1] = 1
            edges[f"k{i}.{j}"] = column
    a = _lift(field, t, graph_rows, edges)
    w = Mat(field, a.row_labels, ("w",), [[0]] * t + [[1]] * 4 + [[0]] * 2)
    contracted = RepresentedMatroid(a.hstack(w)).contract(["w"])
    report.check("box.simple", contracted.is_simple(), True)
    _identify(report, "box", contracted, "ag", t + 3)

    # Every column whose first four entries are an edge of the 4-cycle 1-2-3-4.
    cycle_rows = [f"c{i}" for i in range(1, 5)]
    cycle = {}
    for i, j in ((1, 2), (2, 3), (3, 4), (1, 4)):
        column = [0] * 4
        column[i - 1] = column[j - 1] = 1
        cycle[f"e{i}.{j}"] = column
    lifted = _lift(field, t + 1, cycle_rows, cycle)
    x_rows = [f"x{i}" for i in range(1, t + 2)]
    stacked = StackedFrameRep(lifted.select(rows=x_rows), lifted.select(rows=cycle_rows), SubgroupGamma.trivial(field))
    report.check("cycle.in_class(t+1)", stacked.in_class(t + 1), True)
    _identify(report, "cycle", stacked.matroid(), "ag", t + 3)
    logger.info("techtwo(t=%d): %s", t, "pass" if report.verdict else "fail")
    return report


def witness_techthree(t: int) -> WitnessReport:
    """AG(t+2,3) against the ternary frame class with Gamma = GF(3)^*."""
    _check_t(t)
    field = GF(3)
    full = SubgroupGamma.full(field)
    report = WitnessReport(
        claim=f"AG({t + 2},3) is not in G(GF(3)^*)^{t}; it is a minor of a box extension "
              f"and lies in G({{1}})^{t + 1}",
    )
    report.check("|AG(2,3)| = f(3,2,0,3)", extremal_f(3, 2, 0, 3), 9)
    report.check("max_line(DG(3,GF(3)^*))", max_line_size(dowling(DowlingSpec(FrameClassParams(full, 0), 3))), 4)
    report.check("max_line(AG(2,3))", max_line_size(ag(2, 3)), 3)

    rows = [f"b{i}" for i in range(1, 5)]
    transcribed = Mat.from_rows(field, TECHTHREE_Q_TRANSCRIBED, rows, [f"q{k}" for k in range(1, 10)])
    transcribed_eps = RepresentedMatroid(transcribed.hstack(Mat(field, rows, ("w",), [[1], [1], [1], [0]]))).contract(["w"]).epsilon()
    if transcribed_eps != 9:
        report.notes.append(
            f"the transcribed matrix repeats its third column in the sixth; contracting w then leaves "
            f"{transcribed_eps} points. The sixth column is replaced by (0,0,1,2)."
        )
    q = Mat.from_rows(field, TECHTHREE_Q, rows, [f"q{k}" for k in range(1, 10)])
    report.check("Q.rank", q.rank, 4)
    report.check("Q.frame(GF(3)^*)", is_frame_matrix_up_to_scaling(q, full) is not None, True)
    a = _lift(field, t, rows, q.columns())
    w = Mat(field, a.row_labels, ("w",), [[0]] * t + [[1], [1], [1], [0]])
    m0 = RepresentedMatroid(a.hstack(w)).contract(["w"])
    report.check("box.simple", m0.is_simple(), True)
    _identify(report, "box", m0, "ag", t + 2)

    # Every vector whose first two entries differ.
    lead = ["c1", "c2"] + [f"x{i}" for i in range(1, t + 2)]
    differing = _all_vectors(field, lead, lambda v: v[0] != v[1])
    simple, _ = RepresentedMatroid(differing).simplify()
    report.check(
        "differing.frame({1})",
        is_frame_matrix_up_to_scaling(differing.select(rows=["c1", "c2"]), SubgroupGamma.trivial(field)) is not None,
        True,
    )
    _identify(report, "differing", simple, "ag", t + 2)
    report.notes.append(
        f"the closing step names AG({t + 3},2); the construction over GF(3) produces AG({t + 2},3)"
    )
    logger.info("techthree(t=%d): %s", t, "pass" if report.verdict else "fail")
    return report


def witness_techodd(p: int, t: int) -> WitnessReport:
    """PG(t+1,p) and AG(t+1,p) against the index-2 subgroup class for odd p."""
    _check_t(t)
    if p == 2:
        raise PreconditionError("the index-2 subgroup needs an odd prime")
    field = GF(p)
    gamma = SubgroupGamma.index_two(field)
    g = gamma.order
    x = min(gamma.non_members())
    report = WitnessReport(
        claim=f"PG({t + 1},{p}) is not in G(Gamma)^{t} for the index-2 subgroup Gamma, "
              f"but is a minor of DG^({x})({t + 3},Gamma)^{t} and lies in G({{1}})^{t + 1}",
    )
    f2 = extremal_f(p, g, t, t + 2)
    pg_size = (p ** (t + 2) - 1) // (p - 1)
    report.check("|PG(t+1,p)| > f(p,(p-1)/2,t,t+2)", pg_size > f2, True)
    if p > 3:
        report.check("|AG(t+1,p)| > f(p,(p-1)/2,t,t+2)", p ** (t + 1) > f2, True)

    params = FrameClassParams(gamma, t)
    m = dowling(DowlingSpec(params, t + 3, "x-extension", x))
    report.check("epsilon(M)", m.epsilon(), extremal_f(p, g, t, t + 3) + 1)
    contracted = m.contract(["w"])
    report.check("epsilon(M/e)", contracted.epsilon(), pg_size)
    report.check("points lost", m.epsilon() - 1 - contracted.epsilon(), (p + 1) // 2 * p ** t)
    simple, _ = contracted.simplify()
    _identify(report, "si(M/e)", simple, "pg", t + 1)
    report.notes.append(f"the contraction gives PG({t + 1},{p}), not the binary PG({t + 1},2)")

    # Every vector whose first entry is 0 or 1.
    rows = ["c1"] + [f"x{i}" for i in range(1, t + 2)]
    spread = _all_vectors(field, rows, lambda v: v[0] in (0, 1))
    report.check(
        "spread.frame({1})",
        is_frame_matrix_up_to_scaling(spread.select(rows=["c1"]), SubgroupGamma.trivial(field)) is not None,
        True,
    )
    spread_simple, _ = RepresentedMatroid(spread).simplify()
    _identify(report, "spread", spread_simple, "pg", t + 1)
    logger.info("techodd(p=%d, t=%d): %s", p, t, "pass" if report.verdict else "fail")
    return report
