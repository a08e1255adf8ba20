import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Any

from framelab.errors import PreconditionError
from framelab.frames.dowling import is_frame_matrix_up_to_scaling
from framelab.linalg import Mat, SubgroupGamma
from framelab.matroid import RepresentedMatroid, is_vertically_k_connected

logger = logging.getLogger(__name__)


@dataclass
class CoframeReport:
    """Density of the dual of a frame matroid against epsilon <= 3r."""
    rank: int
    epsilon: int
    cosimple: bool
    coloops: list[str] = field(default_factory=list)
    series_pairs: list[tuple[str, ...]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.epsilon <= 3 * self.rank

    def to_dict(self) -> dict[str, Any]:
        return {
            "rank": self.rank,
            "epsilon": self.epsilon,
            "bound": 3 * self.rank,
            "holds": self.holds,
            "cosimple": self.cosimple,
            "coloops": list(self.coloops),
            "series_pairs": [list(s) for s in self.series_pairs],
        }


def coframe_density_check(frame: Mat, gamma: SubgroupGamma) -> CoframeReport:
    """epsilon(M*) against 3 r(M*) for M = M(frame).

    The bound is sharp only when M is cosimple; coloops and series pairs of
    M are reported so a failure on degenerate input can be told apart.
    """
    if is_frame_matrix_up_to_scaling(frame, gamma) is None:
        raise PreconditionError("coframe density needs a Gamma-frame matrix")
    m = RepresentedMatroid(frame)
    dual = m.dual()
    coloops = m.coloops()
    series = m.series_classes()
    report = CoframeReport(dual.rank, dual.epsilon(), not coloops and not series, coloops, series)
    logger.debug("coframe density: %s", report.to_dict())
    return report


def vertically_connected_filter(matroids: Iterable[RepresentedMatroid], k: int) -> list[RepresentedMatroid]:
    """The matroids that are vertically k-connected; rank below k counts as failing."""
    kept = []
    for m in matroids:
        try:
            if is_vertically_k_connected(m, k):
                kept.append(m)
        except PreconditionError:
            logger.debug("dropping rank-%d matroid from a vertical %d-connectivity filter", m.rank, k)
    return kept
