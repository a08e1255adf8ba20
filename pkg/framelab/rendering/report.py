from collections.abc import Iterable, Sequence
from typing import Any

from framelab.frames.dowling import extremal_f
from framelab.matroid import RepresentedMatroid, is_affine_restriction
from framelab.rendering.json_codec import certificate_to_dict, dumps, matroid_to_dict


class ReportRenderer:
    """Renders results as JSON documents."""

    def __init__(self, include_matrices: bool = True):
        self.include_matrices = include_matrices

    def render(self, result: Any) -> str:
        return dumps(self.to_data(result))

    def to_data(self, result: Any) -> Any:
        """Plain JSON data for a result object, recursing through containers."""
        if isinstance(result, RepresentedMatroid):
            return matroid_to_dict(result) if self.include_matrices else self.matroid_summary(result)
        if hasattr(result, "to_dict"):
            return self.to_data(result.to_dict())
        if isinstance(result, dict):
            return {str(k): self.to_data(v) for k, v in result.items()}
        if isinstance(result, (list, tuple)):
            return [self.to_data(v) for v in result]
        return result

    @staticmethod
    def matroid_summary(m: RepresentedMatroid) -> dict[str, Any]:
        epsilon = m.epsilon()
        return {
            "p": m.field.p,
            "size": m.size,
            "rank": m.rank,
            "epsilon": epsilon,
            "simple": epsilon == m.size,
            "loops": m.loops(),
            "affine_restriction": is_affine_restriction(m),
        }

    @staticmethod
    def minor_report(found, exhaustive: bool = True) -> dict[str, Any]:
        if found is None:
            return {"minor": False, "verdict": "no minor (exhaustive)" if exhaustive else "unknown"}
        return {"minor": True, "verdict": "minor found", "certificate": certificate_to_dict(found)}


class TableFormatter:
    """Formats tables as tab-separated text with a header row."""

    @staticmethod
    def format_tsv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        lines = ["\t".join(header)]
        lines.extend("\t".join(str(x) for x in row) for row in rows)
        return "\n".join(lines) + "\n"

    @staticmethod
    def extremal_table(p: int, g: int, ts: Iterable[int], ns: Iterable[int]) -> str:
        """f_{p,g,t}(n) for every t and every n >= t."""
        ns = list(ns)
        rows = [(t, n, extremal_f(p, g, t, n)) for t in ts for n in ns if n >= t]
        return TableFormatter.format_tsv(("t", "n", "f"), rows)
