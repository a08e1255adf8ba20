from dataclasses import dataclass
from functools import cache, cached_property
from itertools import product

import numpy as np

from framelab.errors import PreconditionError

MAX_PRIME = 31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))


@dataclass(frozen=True)
class PrimeField:
    """The prime field GF(p) for a small prime p."""
    p: int

    def __post_init__(self):
        if not _is_prime(self.p) or self.p > MAX_PRIME:
            raise PreconditionError(f"GF({self.p}) is not a supported prime field (p <= {MAX_PRIME})")

    @cached_property
    def inverse_table(self) -> np.ndarray:
        """inverse_table[a] is the inverse of a; entry 0 is unused."""
        table = np.zeros(self.p, dtype=np.int64)
        for a in range(1, self.p):
            table[a] = pow(a, self.p - 2, self.p)
        table.setflags(write=False)
        return table

    @cached_property
    def primitive_root(self) -> int:
        order = self.p - 1
        factors = [q for q in range(2, order + 1) if order % q == 0 and _is_prime(q)]
        for g in range(1, self.p):
            if all(pow(g, order // q, self.p) != 1 for q in factors):
                return g
        raise AssertionError("every prime field has a primitive root")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return int(self.inverse_table[a])

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def elements(self) -> range:
        return range(self.p)

    def nonzero(self) -> range:
        return range(1, self.p)

    def projective_points(self, dim: int) -> list[tuple[int, ...]]:
        """Vectors of GF(p)^dim whose first nonzero entry is 1, in lexicographic order."""
        points = []
        for lead in range(dim):
            for tail in product(range(self.p), repeat=dim - lead - 1):
                points.append((0,) * lead + (1,) + tail)
        return sorted(points)

    def __str__(self):
        return f"GF({self.p})"


@cache
def GF(p: int) -> PrimeField:
    """Shared PrimeField instance for p."""
    return PrimeField(p)


@dataclass(frozen=True)
class SubgroupGamma:
    """A multiplicative subgroup of GF(p)^*."""
    field: PrimeField
    elements: tuple[int, ...]  # sorted nonzero residues

    def __post_init__(self):
        elements = tuple(sorted({e % self.field.p for e in self.elements}))
        object.__setattr__(self, "elements", elements)
        p = self.field.p
        if not elements or 1 not in elements or 0 in elements:
            raise PreconditionError(f"{list(elements)} is not a subgroup of GF({p})^*")
        members = set(elements)
        for a in elements:
            if self.field.inv(a) not in members:
                raise PreconditionError(f"{list(elements)} is not closed under inverses")
            for b in elements:
                if (a * b) % p not in members:
                    raise PreconditionError(f"{list(elements)} is not closed under multiplication")

    @classmethod
    def generated_by(cls, field: PrimeField, g: int) -> "SubgroupGamma":
        g %= field.p
        if g == 0:
            raise PreconditionError("0 does not generate a multiplicative subgroup")
        elements = {1}
        x = g
        while x != 1:
            elements.add(x)
            x = (x * g) % field.p
        return cls(field, tuple(elements))

    @classmethod
    def of_order(cls, field: PrimeField, order: int) -> "SubgroupGamma":
        if order < 1 or (field.p - 1) % order:
            raise PreconditionError(f"GF({field.p})^* has no subgroup of order {order}")
        return cls.generated_by(field, pow(field.primitive_root, (field.p - 1) // order, field.p))

    @classmethod
    def trivial(cls, field: PrimeField) -> "SubgroupGamma":
        return cls(field, (1,))

    @classmethod
    def full(cls, field: PrimeField) -> "SubgroupGamma":
        return cls(field, tuple(field.nonzero()))

    @classmethod
    def index_two(cls, field: PrimeField) -> "SubgroupGamma":
        """The squares of GF(p)^*, for odd p."""
        if field.p == 2:
            raise PreconditionError("GF(2)^* has no index-2 subgroup")
        return cls.of_order(field, (field.p - 1) // 2)

    @classmethod
    def all(cls, field: PrimeField) -> list["SubgroupGamma"]:
        """Every subgroup of the cyclic group GF(p)^*, smallest first."""
        return [
            cls.of_order(field, d)
            for d in range(1, field.p)
            if (field.p - 1) % d == 0
        ]

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_full(self) -> bool:
        return self.order == self.field.p - 1

    def non_members(self) -> list[int]:
        members = set(self.elements)
        return [a for a in self.field.nonzero() if a not in members]

    def __contains__(self, a: int) -> bool:
        return a % self.field.p in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)
