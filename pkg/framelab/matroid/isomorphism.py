"""Isomorphism and restriction search by backtracking with invariant pruning.

Source elements are assigned in sorted label order and candidates are tried
in sorted order, so the first certificate found is the lexicographically
first one. Every partial assignment must preserve the rank of each set of at
most three assigned elements and of the whole prefix; the final check compares
full rank functions. Binary and ternary matroids are uniquely representable,
so over GF(2) and GF(3) the final abstract check is a projective-equivalence
test instead of a scan over all bases.
"""

import logging
from collections.abc import Callable, Iterator
from itertools import combinations
from typing import NamedTuple

import numpy as np

from framelab.linalg import projectively_equivalent
from framelab.matroid.models import IsoCertificate, Mode
from framelab.matroid.represented import RepresentedMatroid

logger = logging.getLogger(__name__)

HYPERPLANE_POINT_LIMIT = 4096


class Fingerprint(NamedTuple):
    """Isomorphism invariants; `signatures` holds one per element."""
    size: int
    rank: int
    loops: int
    parallel_profile: tuple[int, ...]
    hyperplane_sizes: tuple[int, ...] | None
    signatures: dict[str, tuple]

    def invariant(self) -> tuple:
        return self.size, self.rank, self.loops, self.parallel_profile, self.hyperplane_sizes


def hyperplanes(m: RepresentedMatroid) -> list[int] | None:
    """Hyperplanes as bit masks over m's ground order, or None when there are too many candidates."""
    p, r = m.field.p, m.rank
    if r == 0:
        return []
    if (p ** r - 1) // (p - 1) > HYPERPLANE_POINT_LIMIT:
        return None
    normals = np.array(m.field.projective_points(r), dtype=np.int64)
    zero_sets = ((normals @ m.rep.entries) % p) == 0
    found = set()
    for row in zero_sets:
        mask = sum(1 << int(j) for j in np.flatnonzero(row))
        if mask not in found and m.oracle.rank_mask(mask) == r - 1:
            found.add(mask)
    return sorted(found)


def fingerprint(m: RepresentedMatroid) -> Fingerprint:
    loops = set(m.loops())
    class_size = {}
    for c in m.parallel_classes():
        for e in c:
            class_size[e] = len(c)
    flats = hyperplanes(m)
    signatures = {}
    for j, e in enumerate(m.ground):
        hyper = None if flats is None else tuple(sorted(h.bit_count() for h in flats if h >> j & 1))
        signatures[e] = (e in loops, class_size.get(e, 0), hyper)
    return Fingerprint(
        size=m.size,
        rank=m.rank,
        loops=len(loops),
        parallel_profile=tuple(sorted(len(c) for c in m.parallel_classes())),
        hyperplane_sizes=None if flats is None else tuple(sorted(h.bit_count() for h in flats)),
        signatures=signatures,
    )


def _rank_functions_agree(source: RepresentedMatroid, target: RepresentedMatroid, mapping: dict[str, str]) -> bool:
    """Whether mapping carries every basis of source to a basis of target and back."""
    if source.size != target.size or source.rank != target.rank:
        return False
    r = source.rank
    order = list(source.ground)
    images = [mapping[e] for e in order]
    return all(
        source.oracle.rank(subset) == target.oracle.rank([images[order.index(e)] for e in subset])
        for subset in combinations(order, r)
    )


def _final_check(source: RepresentedMatroid, target: RepresentedMatroid, mapping: dict[str, str], mode: Mode) -> IsoCertificate | None:
    comparable = source.field == target.field
    witness = None
    if comparable:
        moved = source.relabel(mapping)
        witness = projectively_equivalent(target.rep, moved.rep)
    if mode == "represented":
        return IsoCertificate(dict(mapping), witness, "represented") if witness is not None else None
    if comparable and source.field.p <= 3:
        return IsoCertificate(dict(mapping), witness, "abstract") if witness is not None else None
    if _rank_functions_agree(source, target, mapping):
        return IsoCertificate(dict(mapping), witness, "abstract")
    return None


def _backtrack(
    source: RepresentedMatroid,
    target: RepresentedMatroid,
    candidates: dict[str, list[str]],
    accept: Callable[[dict[str, str]], IsoCertificate | None],
) -> Iterator[IsoCertificate]:
    order = sorted(source.ground)
    s_oracle, t_oracle = source.oracle, target.oracle
    s_bit = {e: 1 << j for j, e in enumerate(source.ground)}
    t_bit = {e: 1 << j for j, e in enumerate(target.ground)}
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def consistent(k: int, s: str, t: str, s_prefix: int, t_prefix: int) -> bool:
        sb, tb = s_bit[s], t_bit[t]
        if s_oracle.rank_mask(sb) != t_oracle.rank_mask(tb):
            return False
        earlier = order[:k]
        for i, x in enumerate(earlier):
            xs, xt = s_bit[x], t_bit[mapping[x]]
            if s_oracle.rank_mask(sb | xs) != t_oracle.rank_mask(tb | xt):
                return False
            for y in earlier[i + 1:]:
                if s_oracle.rank_mask(sb | xs | s_bit[y]) != t_oracle.rank_mask(tb | xt | t_bit[mapping[y]]):
                    return False
        return s_oracle.rank_mask(s_prefix | sb) == t_oracle.rank_mask(t_prefix | tb)

    def extend(k: int, s_prefix: int, t_prefix: int) -> Iterator[IsoCertificate]:
        if k == len(order):
            certificate = accept(mapping)
            if certificate is not None:
                yield certificate
            return
        s = order[k]
        for t in candidates[s]:
            if t in used or not consistent(k, s, t, s_prefix, t_prefix):
                continue
            mapping[s] = t
            used.add(t)
            yield from extend(k + 1, s_prefix | s_bit[s], t_prefix | t_bit[t])
            del mapping[s]
            used.discard(t)

    yield from extend(0, 0, 0)


def is_isomorphic(a: RepresentedMatroid, b: RepresentedMatroid, mode: Mode = "abstract") -> IsoCertificate | None:
    """The lexicographically first isomorphism a -> b, or None.

    In represented mode the relabelled representation of a must be
    projectively equivalent to b; in abstract mode only rank functions must
    agree.
    """
    if a.size != b.size or a.rank != b.rank:
        return None
    if mode == "represented" and a.field != b.field:
        return None
    fa, fb = fingerprint(a), fingerprint(b)
    if fa.loops != fb.loops or fa.parallel_profile != fb.parallel_profile:
        return None
    use_hyperplanes = fa.hyperplane_sizes is not None and fb.hyperplane_sizes is not None
    if use_hyperplanes and fa.hyperplane_sizes != fb.hyperplane_sizes:
        return None

    def signature(fp: Fingerprint, e: str) -> tuple:
        return fp.signatures[e] if use_hyperplanes else fp.signatures[e][:2]

    targets = sorted(b.ground)
    candidates = {e: [t for t in targets if signature(fb, t) == signature(fa, e)] for e in a.ground}
    if any(not c for c in candidates.values()):
        return None
    found = next(_backtrack(a, b, candidates, lambda mapping: _final_check(a, b, mapping, mode)), None)
    logger.debug("isomorphism search on %d elements: %s", a.size, "found" if found else "none")
    return found


def find_restriction(pattern: RepresentedMatroid, host: RepresentedMatroid, mode: Mode = "abstract") -> IsoCertificate | None:
    """An injective map pattern -> host whose image restriction is isomorphic to pattern."""
    if pattern.size > host.size or pattern.rank > host.rank:
        return None
    if mode == "represented" and pattern.field != host.field:
        return None
    host_loops = set(host.loops())
    pattern_loops = set(pattern.loops())
    if len(pattern_loops) > len(host_loops):
        return None
    targets = sorted(host.ground)
    candidates = {
        e: [t for t in targets if (t in host_loops) == (e in pattern_loops)]
        for e in pattern.ground
    }

    def accept(mapping: dict[str, str]) -> IsoCertificate | None:
        image = host.restrict(mapping.values())
        return _final_check(pattern, image, mapping, mode)

    return next(_backtrack(pattern, host, candidates, accept), None)


def same_matroid(a: RepresentedMatroid, b: RepresentedMatroid) -> bool:
    """Whether the identity on labels is an isomorphism of the underlying matroids."""
    if set(a.ground) != set(b.ground):
        return False
    return _final_check(a, b, {e: e for e in a.ground}, "abstract") is not None


def max_line_size(m: RepresentedMatroid) -> int:
    """Number of points on a largest line of si(m)."""
    simple, eps = m.simplify()
    if simple.rank < 2:
        return eps
    oracle = simple.oracle
    n = simple.size
    lines = set()
    for i, j in combinations(range(n), 2):
        pair = 1 << i | 1 << j
        if any(pair & line == pair for line in lines):
            continue
        line = pair
        for k in range(n):
            if oracle.rank_mask(pair | 1 << k) == 2:
                line |= 1 << k
        lines.add(line)
    return max(line.bit_count() for line in lines)
