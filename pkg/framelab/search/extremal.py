"""Desk-scale extremal search over point sets of a projective geometry.

Simple GF(p)-represented matroids of rank at most n are the point sets of
PG(n - 1, p). Excluding a minor is closed under taking subsets, so the
search grows minor-free point sets one point at a time, keeping one set per
isomorphism class at each size.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from tqdm import tqdm

from framelab.errors import BudgetExceeded, ResourceLimitError
from framelab.frames.geometry import pg
from framelab.matroid import IsoClassCache, RepresentedMatroid
from framelab.search.config import SearchBudget, SearchConfig
from framelab.search.minors import has_minor

logger = logging.getLogger(__name__)

MAX_RANK = {2: 5, 3: 4}


@dataclass
class ExtremalResult:
    p: int
    n: int
    max_size: int  # rank exactly n
    max_size_at_most: int  # rank at most n
    extremal: list[RepresentedMatroid] = field(default_factory=list)
    exhaustive: bool = True
    candidates: int = 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "rank": self.n,
            "max_size": self.max_size,
            "max_size_at_most": self.max_size_at_most,
            "extremal_count": len(self.extremal),
            "exhaustive": self.exhaustive,
            "candidates": self.candidates,
        }


def _minor_free(candidate: RepresentedMatroid, pattern: RepresentedMatroid, config: SearchConfig, budget: SearchBudget) -> bool:
    if candidate.rank < pattern.rank or candidate.size < pattern.size:
        return True
    return has_minor(candidate, pattern, SearchConfig(max_ground=max(config.max_ground, candidate.size)), budget) is None


def max_simple_no_minor(p: int, n: int, pattern: RepresentedMatroid, config: SearchConfig | None = None) -> ExtremalResult:
    """Largest simple rank-n GF(p)-represented matroid with no pattern minor, and every extremal one."""
    config = config or SearchConfig()
    if p not in MAX_RANK or n > MAX_RANK[p] or n < 1:
        raise ResourceLimitError(f"extremal search supports ranks up to {MAX_RANK} by prime, got p = {p}, n = {n}")
    budget = config.budget("extremal search")
    space = pg(n - 1, p)
    points = space.ground
    best = {"exact": 0, "at_most": 0}
    level: list[tuple[tuple[str, ...], RepresentedMatroid]] = [((), space.restrict(()))]
    last_full_rank = [m for _, m in level if m.rank == n]
    exhaustive = True

    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        progress = tqdm(total=len(points), desc="points", disable=not config.show_progress)
        while level:
            cache = IsoClassCache(mode="abstract")
            fresh: list[tuple[tuple[str, ...], RepresentedMatroid]] = []
            try:
                for chosen, _ in level:
                    for e in points:
                        if e in chosen:
                            continue
                        budget.spend()
                        subset = tuple(x for x in points if x in set(chosen) or x == e)
                        candidate = space.restrict(subset)
                        if cache.add(candidate):
                            fresh.append((subset, candidate))
                verdicts = list(pool.map(lambda item: _minor_free(item[1], pattern, config, budget), fresh))
            except BudgetExceeded as exc:
                logger.warning("extremal search stopped early: %s", exc)
                exhaustive = False
                break
            level = [item for item, ok in zip(fresh, verdicts) if ok]
            if level:
                size = len(level[0][0])
                best["at_most"] = size
                full = [m for _, m in level if m.rank == n]
                if full:
                    best["exact"] = size
                    last_full_rank = full
                logger.info("%d minor-free classes with %d points", len(level), size)
            progress.update(1)
        progress.close()

    extremal = [m for m in last_full_rank if m.size == best["exact"]]
    return ExtremalResult(p, n, best["exact"], best["at_most"], extremal, exhaustive, budget.spent)
