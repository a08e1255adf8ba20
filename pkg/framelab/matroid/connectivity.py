import logging
from collections.abc import Iterable

import numpy as np

from framelab.errors import PreconditionError, ResourceLimitError
from framelab.matroid.represented import RepresentedMatroid

logger = logging.getLogger(__name__)

MAX_PARTITION_GROUND = 20


def connectivity(m: RepresentedMatroid, labels: Iterable[str]) -> int:
    """lambda_M(A) = r(A) + r(E - A) - r(M)."""
    side = set(m.check_labels(labels))
    other = [e for e in m.ground if e not in side]
    return m.rank_of(side) + m.rank_of(other) - m.rank


def is_vertically_k_connected(m: RepresentedMatroid, k: int) -> bool:
    """Every partition (A, B) with lambda(A) < k - 1 has a spanning side."""
    if k > m.rank:
        raise PreconditionError(f"vertical {k}-connectivity needs k <= r(M) = {m.rank}")
    if m.size > MAX_PARTITION_GROUND:
        raise ResourceLimitError(f"partition scan is capped at {MAX_PARTITION_GROUND} elements, got {m.size}")
    if k <= 1 or m.size == 0:
        return True
    oracle = m.oracle
    r = m.rank
    full = (1 << m.size) - 1
    # Partitions are unordered, so element 0 always sits in A.
    for rest in range(1 << (m.size - 1)):
        a = rest << 1 | 1
        b = full & ~a
        ra = oracle.rank_mask(a, cache=False)
        rb = oracle.rank_mask(b, cache=False)
        if ra + rb - r < k - 1 and ra < r and rb < r:
            logger.debug("vertical separation of order %d at %s", ra + rb - r + 1, oracle.labels_of(a))
            return False
    return True


def is_affine_restriction(m: RepresentedMatroid) -> bool:
    """Whether the row space holds a vector with no zero entry.

    Coefficients are chosen row by row; a column is settled once every row in
    its support has a coefficient, and a settled zero entry prunes the branch.
    The first nonzero coefficient is fixed to 1.
    """
    rep = m.rep.entries
    p = m.field.p
    r, n = rep.shape
    if n == 0:
        return True
    if m.loops():
        return False
    last_row = [int(np.flatnonzero(rep[:, j])[-1]) for j in range(n)]
    settled_at = [[j for j in range(n) if last_row[j] == i] for i in range(r)]

    def search(i: int, partial: np.ndarray, started: bool) -> bool:
        if i == r:
            return True
        choices = range(p) if started else (0, 1)
        for c in choices:
            if i == r - 1 and not started and c == 0:
                continue
            values = (partial + c * rep[i]) % p
            if all(values[j] for j in settled_at[i]) and search(i + 1, values, started or c == 1):
                return True
        return False

    return search(0, np.zeros(n, dtype=np.int64), False)
