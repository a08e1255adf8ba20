"""Brute-force minor containment.

Every minor N of M is M / T minus D for an independent T of size
r(M) - r(N), so the search walks independent sets in lexicographic order,
contracts, and looks for a restriction isomorphic to N. Contractions with
isomorphic results are examined once.
"""

import logging
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations, islice

from framelab.errors import ResourceLimitError
from framelab.matroid import IsoCertificate, IsoClassCache, MinorCertificate, RepresentedMatroid, find_restriction
from framelab.search.config import SearchBudget, SearchConfig

logger = logging.getLogger(__name__)


def _contractions(host: RepresentedMatroid, k: int, simple: bool, budget: SearchBudget) -> Iterator[tuple[tuple[str, ...], RepresentedMatroid]]:
    """(T, M / T) for independent T of size k, skipping results isomorphic to earlier ones."""
    seen = IsoClassCache(mode="abstract")
    for t in combinations(host.ground, k):
        if host.rank_of(t) != k:
            continue
        budget.spend()
        minor = host.contract(t)
        if simple:
            minor, _ = minor.simplify()
        if seen.add(minor):
            yield t, minor


def _certificate(host: RepresentedMatroid, t: tuple[str, ...], iso: IsoCertificate) -> MinorCertificate:
    image = set(iso.bijection.values())
    delete = tuple(e for e in host.ground if e not in image and e not in set(t))
    return MinorCertificate(contract=t, delete=delete, map=dict(iso.bijection), mode="abstract")


def has_minor(host: RepresentedMatroid, pattern: RepresentedMatroid, config: SearchConfig | None = None,
              budget: SearchBudget | None = None) -> MinorCertificate | None:
    """The lexicographically first minor certificate for pattern in host, or None.

    None is exhaustive: BudgetExceeded is raised instead when the search
    cannot finish.
    """
    config = config or SearchConfig()
    if host.size > config.max_ground:
        raise ResourceLimitError(f"minor search is capped at {config.max_ground} elements, got {host.size}")
    budget = budget or config.budget("minor search")
    k = host.rank - pattern.rank
    if k < 0 or pattern.size > host.size:
        return None
    simple = pattern.is_simple()
    candidates = _contractions(host, k, simple, budget)

    def check(item):
        t, minor = item
        return t, find_restriction(pattern, minor, mode="abstract")

    batch = 1 if config.workers == 1 else 4 * config.workers
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        while chunk := list(islice(candidates, batch)):
            for t, iso in pool.map(check, chunk):
                if iso is not None:
                    logger.info("found %d-element pattern after contracting %s", pattern.size, list(t))
                    return _certificate(host, t, iso)
    logger.info("no minor after %d contraction sets", budget.spent)
    return None
