from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Literal

if TYPE_CHECKING:
    from framelab.matroid.represented import RepresentedMatroid

Mode = Literal["abstract", "represented"]


@dataclass
class IsoCertificate:
    bijection: dict[str, str]  # source label -> target label
    scalings: dict[str, int] | None = None  # keyed by target labels
    mode: Mode = "represented"

    def apply(self, source: RepresentedMatroid) -> RepresentedMatroid:
        """Push source through the bijection (and scalings, when present)."""
        moved = source.relabel(self.bijection)
        if self.scalings:
            moved = moved.scale(self.scalings)
        return moved


@dataclass
class MinorCertificate:
    """Contract/delete sets in a host plus the way the minor lands on a pattern.

    `map` sends pattern labels to the host labels that survive the minor, and
    `scalings` (keyed by pattern labels) turn the relabelled minor into the
    pattern's row space. Without scalings only the rank functions agree.
    """
    contract: tuple[str, ...]
    delete: tuple[str, ...]
    map: dict[str, str]
    scalings: dict[str, int] | None = None
    mode: Mode = "abstract"
    notes: list[str] = field(default_factory=list)

    def apply(self, host: RepresentedMatroid) -> RepresentedMatroid:
        minor = host.contract(self.contract).delete(self.delete)
        inverse = {h: q for q, h in self.map.items()}
        if set(inverse) != set(minor.ground):
            raise ValueError("certificate map does not cover the minor's ground set")
        minor = minor.relabel(inverse)
        if self.scalings:
            minor = minor.scale(self.scalings)
        return minor

    def validates(self, host: RepresentedMatroid, pattern: RepresentedMatroid) -> bool:
        """Replay the certificate on host and compare with pattern."""
        from framelab.matroid.isomorphism import same_matroid

        if set(self.contract) & set(self.delete):
            return False
        try:
            minor = self.apply(host)
        except (KeyError, ValueError):
            return False
        if set(minor.ground) != set(pattern.ground):
            return False
        if self.mode == "represented":
            return minor.same_row_space(pattern)
        return same_matroid(minor, pattern)
