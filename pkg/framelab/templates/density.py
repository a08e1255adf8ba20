"""Density bounds for matroids conforming (or co-conforming) to a template."""

import logging
from dataclasses import dataclass
from typing import Any, Literal

from framelab.frames.dowling import extremal_f
from framelab.matroid import RepresentedMatroid
from framelab.templates.models import FrameTemplate
from framelab.templates.reduction import is_reduced
from framelab.templates.respect import complexity

logger = logging.getLogger(__name__)


@dataclass
class DensityCheck:
    side: Literal["primal", "dual"]
    bound: int
    epsilon: int
    rank: int
    reduced: bool

    @property
    def holds(self) -> bool:
        return self.epsilon <= self.bound

    def to_dict(self) -> dict[str, Any]:
        return {
            "side": self.side,
            "rank": self.rank,
            "epsilon": self.epsilon,
            "bound": self.bound,
            "holds": self.holds,
            "reduced_template": self.reduced,
        }


def _frame_part(p: int, g: int, t: int, r: int) -> int:
    # Below rank t the class still only holds subsets of PG(r - 1, p).
    if r < t:
        return (p ** r - 1) // (p - 1)
    return extremal_f(p, g, t, r)


def primal_bound(phi: FrameTemplate, r: int) -> int:
    """f_{p,|Gamma|,t}(r) + p^(t+1) c (r + c) with t = dim Lambda and c the complexity."""
    p, t, c = phi.p, phi.lam.dim, complexity(phi)
    return _frame_part(p, phi.gamma.order, t, r) + p ** (t + 1) * c * (r + c)


def dual_bound(phi: FrameTemplate, r: int) -> int:
    """p^c (3r + 6c + 1)."""
    c = complexity(phi)
    return phi.p ** c * (3 * r + 6 * c + 1)


def density_bound_primal(phi: FrameTemplate, m: RepresentedMatroid) -> DensityCheck:
    """Bound epsilon(m) for m conforming to phi.

    The bound is only promised for reduced templates; the check is still
    computed otherwise and `reduced` records which case applies.
    """
    check = DensityCheck("primal", primal_bound(phi, m.rank), m.epsilon(), m.rank, is_reduced(phi))
    if not check.holds:
        logger.warning("primal density bound fails: %s", check.to_dict())
    return check


def density_bound_dual(phi: FrameTemplate, m: RepresentedMatroid) -> DensityCheck:
    """Bound epsilon(m) for m whose dual conforms to phi."""
    check = DensityCheck("dual", dual_bound(phi, m.rank), m.epsilon(), m.rank, is_reduced(phi))
    if not check.holds:
        logger.warning("dual density bound fails: %s", check.to_dict())
    return check
