from dataclasses import dataclass, field

from framelab.matroid.isomorphism import fingerprint, is_isomorphic
from framelab.matroid.models import Mode
from framelab.matroid.represented import RepresentedMatroid


@dataclass
class IsoClassCache:
    """
    Keeps one representative per isomorphism class.
    Fingerprints split the classes into buckets; within a bucket the
    isomorphism search decides.
    """
    mode: Mode = "represented"
    buckets: dict[tuple, list[RepresentedMatroid]] = field(default_factory=dict)
    order: list[RepresentedMatroid] = field(default_factory=list)

    def add(self, m: RepresentedMatroid) -> bool:
        """Store m unless an isomorphic matroid is cached; True when m is new."""
        key = fingerprint(m).invariant()
        if self.mode == "represented":
            key = (m.field.p,) + key
        bucket = self.buckets.setdefault(key, [])
        for known in bucket:
            if known == m or is_isomorphic(known, m, self.mode) is not None:
                return False
        bucket.append(m)
        self.order.append(m)
        return True

    def find(self, m: RepresentedMatroid) -> RepresentedMatroid | None:
        """The cached representative isomorphic to m, if any."""
        key = fingerprint(m).invariant()
        if self.mode == "represented":
            key = (m.field.p,) + key
        for known in self.buckets.get(key, []):
            if known == m or is_isomorphic(known, m, self.mode) is not None:
                return known
        return None

    def representatives(self) -> list[RepresentedMatroid]:
        """Cached matroids in insertion order."""
        return list(self.order)

    def __len__(self) -> int:
        return len(self.order)
