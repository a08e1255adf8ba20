"""Bounded enumeration of conforming matroids, the oracle behind equivalence evidence.

For each choice of the rows of A[B - X, Y0 + Y1 + C] (a multiset of Delta
vectors) every available free column is pushed through the contraction of
C, giving a finite set of points. The conforming matroids are then Y0
together with any choice of those points. By default only sets of distinct
nonloop points are enumerated: loops and parallel copies can be added to any
member, so two templates agree on the full bounded classes exactly when they
agree on these.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Any

import numpy as np
from tqdm import tqdm

from framelab.errors import ResourceLimitError
from framelab.linalg import Mat, kernel
from framelab.matroid import IsoClassCache, RepresentedMatroid, normalize_column
from framelab.search.config import SearchBudget, budget_from_env
from framelab.templates.models import FrameTemplate, ReductionTrace

logger = logging.getLogger(__name__)

MAX_ENUMERATION_GROUND = 8


def frame_columns(gamma, k: int) -> list[tuple[int, ...]]:
    """Every exact Gamma-frame column of length k: zero, units and c e_j - e_i."""
    field_ = gamma.field
    minus_one = field_.neg(1)
    columns = [tuple([0] * k)]
    for i in range(k):
        unit = [0] * k
        unit[i] = 1
        columns.append(tuple(unit))
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            for c in gamma:
                column = [0] * k
                column[i] = minus_one
                column[j] = c
                columns.append(tuple(column))
    return columns


def _points(phi: FrameTemplate, fixed: np.ndarray, k: int, lam_vectors, frames) -> tuple[np.ndarray, list[tuple[int, ...] | None]]:
    """The projection killing the C columns and the images of every free column."""
    p = phi.p
    n_rows = fixed.shape[0]
    c_idx = [phi.cy.index(c) for c in phi.C]
    if c_idx:
        cmat = Mat(phi.field, [f"r{i}" for i in range(n_rows)], [f"c{j}" for j in range(len(c_idx))], fixed[:, c_idx])
        quotient = kernel(cmat.transpose()).entries
    else:
        quotient = np.eye(n_rows, dtype=np.int64)
    options = []
    for lam in lam_vectors:
        for f in frames:
            options.append(np.array(lam + f, dtype=np.int64))
    x = len(phi.X)
    for y in phi.Y1:
        base = fixed[:, phi.cy.index(y)]
        for i in range(k):
            shifted = base.copy()
            shifted[x + i] = (shifted[x + i] + 1) % p
            options.append(shifted)
    images = [normalize_column(((quotient @ v) % p).tolist(), phi.field) for v in options]
    return quotient, images


def _candidates(phi: FrameTemplate, k: int, rows: tuple[tuple[int, ...], ...], max_ground: int,
                distinct_points: bool, budget: SearchBudget, lam_vectors) -> list[RepresentedMatroid]:
    p = phi.p
    fixed = np.zeros((len(phi.X) + k, len(phi.cy)), dtype=np.int64)
    fixed[: len(phi.X)] = phi.a1.entries
    for i, row in enumerate(rows):
        fixed[len(phi.X) + i] = row
    quotient, images = _points(phi, fixed, k, lam_vectors, frame_columns(phi.gamma, k))
    y0 = (quotient @ fixed[:, [phi.cy.index(y) for y in phi.Y0]]) % p if phi.Y0 else None
    q_rows = [f"q{i}" for i in range(quotient.shape[0])]
    zero = tuple([0] * quotient.shape[0])
    points = sorted({pt for pt in images if pt is not None})
    if distinct_points:
        choices = [c for j in range(max_ground + 1) for c in combinations(points, j)]
    else:
        pool = points + ([zero] if any(pt is None for pt in images) else [])
        choices = [c for j in range(max_ground + 1) for c in combinations_with_replacement(pool, j)]
    found: dict[RepresentedMatroid, None] = {}
    for choice in choices:
        budget.spend()
        columns = {y: y0[:, i] for i, y in enumerate(phi.Y0)}
        for j, pt in enumerate(choice, start=1):
            columns[f"f{j}"] = pt
        m = RepresentedMatroid(Mat.from_columns(phi.field, q_rows, columns))
        found.setdefault(m)
    return list(found)


@dataclass
class ConformingClasses:
    """Conforming matroids up to represented isomorphism within an enumeration bound."""
    template: FrameTemplate
    max_ground: int
    max_rows: int
    matroids: list[RepresentedMatroid]
    candidates: int
    distinct_points: bool = True

    def __len__(self) -> int:
        return len(self.matroids)

    def __iter__(self):
        return iter(self.matroids)


def enumerate_conforming(
    phi: FrameTemplate,
    max_ground: int,
    max_rows: int,
    budget: SearchBudget | None = None,
    distinct_points: bool = True,
    threads: int = 1,
    show_progress: bool = False,
) -> ConformingClasses:
    """Every conforming matroid with at most max_ground free columns and max_rows frame rows."""
    if max_ground > MAX_ENUMERATION_GROUND:
        raise ResourceLimitError(f"enumeration is capped at {MAX_ENUMERATION_GROUND} free columns, got {max_ground}")
    if max_ground < 0 or max_rows < 0:
        raise ValueError("enumeration bounds must be nonnegative")
    budget = budget or SearchBudget(budget_from_env(), what="conforming enumeration")
    lam_vectors = [tuple(v) for v in phi.lam.vectors()]
    delta_vectors = sorted(tuple(v) for v in phi.delta.vectors())
    jobs = [
        (k, tuple(delta_vectors[i] for i in combo))
        for k in range(max_rows + 1)
        for combo in combinations_with_replacement(range(len(delta_vectors)), k)
    ]

    def run(job):
        k, rows = job
        return _candidates(phi, k, rows, max_ground, distinct_points, budget, lam_vectors)

    cache = IsoClassCache(mode="represented")
    with ThreadPoolExecutor(max_workers=max(threads, 1)) as pool:
        results = pool.map(run, jobs)
        for batch in tqdm(results, total=len(jobs), desc="respecting rows", disable=not show_progress):
            for m in batch:
                cache.add(m)
    matroids = sorted(cache.representatives(), key=lambda m: (m.size, m.rank))
    logger.info("%d conforming classes from %d candidates", len(matroids), budget.spent)
    return ConformingClasses(phi, max_ground, max_rows, matroids, budget.spent, distinct_points)


@dataclass
class EquivalenceEvidence:
    """Comparison of two bounded enumerations; agreement is evidence, not proof."""
    left: int
    right: int
    unmatched_left: list[RepresentedMatroid] = field(default_factory=list)
    unmatched_right: list[RepresentedMatroid] = field(default_factory=list)
    label: str = ""

    @property
    def equivalent(self) -> bool:
        return not self.unmatched_left and not self.unmatched_right

    def to_dict(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "left": self.left,
            "right": self.right,
            "unmatched_left": len(self.unmatched_left),
            "unmatched_right": len(self.unmatched_right),
            "verdict": "equal" if self.equivalent else "differ",
        }


def compare_classes(a: ConformingClasses, b: ConformingClasses, label: str = "") -> EquivalenceEvidence:
    left, right = IsoClassCache(mode="represented"), IsoClassCache(mode="represented")
    for m in a:
        left.add(m)
    for m in b:
        right.add(m)
    return EquivalenceEvidence(
        left=len(a),
        right=len(b),
        unmatched_left=[m for m in a if right.find(m) is None],
        unmatched_right=[m for m in b if left.find(m) is None],
        label=label,
    )


def equivalence_evidence(phi: FrameTemplate, psi: FrameTemplate, max_ground: int, max_rows: int, **kwargs) -> EquivalenceEvidence:
    return compare_classes(
        enumerate_conforming(phi, max_ground, max_rows, **kwargs),
        enumerate_conforming(psi, max_ground, max_rows, **kwargs),
    )


def verify_trace(trace: ReductionTrace, max_ground: int, max_rows: int, **kwargs) -> list[EquivalenceEvidence]:
    """Evidence for every pass of a reduction, enumerating each template once."""
    memo: dict[FrameTemplate, ConformingClasses] = {}

    def classes(phi: FrameTemplate) -> ConformingClasses:
        if phi not in memo:
            memo[phi] = enumerate_conforming(phi, max_ground, max_rows, **kwargs)
        return memo[phi]

    evidence = []
    for step in trace:
        result = compare_classes(classes(step.before), classes(step.after), label=step.name)
        if not result.equivalent:
            logger.warning("pass %s changed the bounded class: %s", step.name, result.to_dict())
        evidence.append(result)
    return evidence
