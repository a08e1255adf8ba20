from dataclasses import dataclass, field
from typing import Any, Literal

import numpy as np

from framelab.errors import LabelError, PreconditionError
from framelab.linalg import Mat, PrimeField, SubgroupGamma, Subspace

PassName = Literal["normalize-delta", "unitary", "contract", "project-delta", "prune"]


@dataclass(frozen=True, eq=False)
class FrameTemplate:
    """(Gamma, C, X, Y0, Y1, A1, Delta, Lambda) over a prime field.

    A1 has rows X and columns Y0 + Y1 + C; Delta lives over those same
    columns and Lambda over X. Matrices and subspaces handed in with the
    right labels in another order are reordered on construction.
    """
    gamma: SubgroupGamma
    C: tuple[str, ...]
    X: tuple[str, ...]
    Y0: tuple[str, ...]
    Y1: tuple[str, ...]
    a1: Mat
    delta: Subspace
    lam: Subspace

    def __post_init__(self):
        for name in ("C", "X", "Y0", "Y1"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        labels = self.X + self.cy
        if len(set(labels)) != len(labels):
            raise LabelError("C, X, Y0 and Y1 must be pairwise disjoint")
        field_ = self.gamma.field
        for name, value in (("A1", self.a1.field), ("Delta", self.delta.field), ("Lambda", self.lam.field)):
            if value != field_:
                raise PreconditionError(f"{name} is over GF({value.p}), Gamma over GF({field_.p})")
        if set(self.a1.row_labels) != set(self.X) or set(self.a1.col_labels) != set(self.cy):
            raise LabelError("A1 must have rows X and columns Y0 + Y1 + C")
        if set(self.delta.ambient) != set(self.cy) or len(self.delta.ambient) != len(self.cy):
            raise LabelError("Delta must live over Y0 + Y1 + C")
        if set(self.lam.ambient) != set(self.X) or len(self.lam.ambient) != len(self.X):
            raise LabelError("Lambda must live over X")
        object.__setattr__(self, "a1", self.a1.select(rows=self.X, cols=self.cy))
        if self.delta.ambient != self.cy:
            object.__setattr__(self, "delta", self.delta.reorder(self.cy))
        if self.lam.ambient != self.X:
            object.__setattr__(self, "lam", self.lam.reorder(self.X))

    @classmethod
    def trivial(cls, gamma: SubgroupGamma) -> "FrameTemplate":
        """Every label set empty; its conforming matroids are the Gamma-frame matroids."""
        f = gamma.field
        return cls(gamma, (), (), (), (), Mat.zeros(f, (), ()), Subspace.zero(f, ()), Subspace.zero(f, ()))

    @property
    def field(self) -> PrimeField:
        return self.gamma.field

    @property
    def p(self) -> int:
        return self.gamma.field.p

    @property
    def cy(self) -> tuple[str, ...]:
        """The columns of A1: Y0 + Y1 + C."""
        return self.Y0 + self.Y1 + self.C

    @property
    def Y(self) -> tuple[str, ...]:
        return self.Y0 + self.Y1

    @property
    def labels(self) -> set[str]:
        return set(self.X) | set(self.cy)

    def replace(self, **changes) -> "FrameTemplate":
        values = {
            "gamma": self.gamma, "C": self.C, "X": self.X, "Y0": self.Y0, "Y1": self.Y1,
            "a1": self.a1, "delta": self.delta, "lam": self.lam,
        }
        values.update(changes)
        return FrameTemplate(**values)

    def lambda_partition(self) -> tuple[tuple[str, ...], tuple[str, ...]]:
        """(X0, X1) with X1 the coordinates on which every vector of Lambda vanishes."""
        support = self.lam.basis.entries.any(axis=0) if self.lam.dim else np.zeros(len(self.X), dtype=bool)
        x0 = tuple(x for x, s in zip(self.X, support) if s)
        x1 = tuple(x for x, s in zip(self.X, support) if not s)
        return x0, x1

    def key(self) -> tuple:
        return (
            self.p, tuple(self.gamma), self.C, self.X, self.Y0, self.Y1,
            self.a1.key(), self.delta.key(), self.lam.key(),
        )

    def __eq__(self, other):
        if not isinstance(other, FrameTemplate):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def summary(self) -> dict[str, Any]:
        return {
            "C": list(self.C), "X": list(self.X), "Y0": list(self.Y0), "Y1": list(self.Y1),
            "dim_delta": self.delta.dim, "dim_lambda": self.lam.dim,
        }


def frame_class_template(gamma: SubgroupGamma, t: int) -> FrameTemplate:
    """|X| = t, Lambda = GF(p)^X and no other labels; conforming matroids form G(Gamma)^t."""
    if t < 0:
        raise PreconditionError(f"t must be nonnegative, got {t}")
    f = gamma.field
    x = tuple(f"x{i}" for i in range(1, t + 1))
    return FrameTemplate(gamma, (), x, (), (), Mat.zeros(f, x, ()), Subspace.zero(f, ()), Subspace.full(f, x))


@dataclass
class RespectWitness:
    """How a matrix respects a template: which columns are Z, template or frame columns."""
    rows: tuple[str, ...]
    cols: tuple[str, ...]
    z: tuple[str, ...]
    template_cols: tuple[str, ...]
    frame_cols: tuple[str, ...]
    z_candidates: tuple[str, ...] = ()

    def validates(self, a: Mat, phi: FrameTemplate) -> bool:
        from framelab.templates.respect import check_respect

        if (a.row_labels, a.col_labels) != (self.rows, self.cols):
            return False
        return check_respect(a, phi, self.z) is not None


@dataclass(frozen=True)
class ShiftMatrix:
    """I_E + H where column z of H is the unit vector on assignment[z] (a Y1 label)."""
    E: tuple[str, ...]
    assignment: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "E", tuple(self.E))
        known = set(self.E)
        for z, y in self.assignment.items():
            if z not in known or y not in known:
                raise LabelError(f"shift {z} <- {y} uses labels outside E")
            if z == y:
                raise PreconditionError(f"{z} cannot be shifted by itself")
        if set(self.assignment) & set(self.assignment.values()):
            raise PreconditionError("Z and the shifting columns must be disjoint")

    @property
    def Z(self) -> tuple[str, ...]:
        return tuple(z for z in self.E if z in self.assignment)

    def matrix(self, field_: PrimeField) -> Mat:
        s = np.eye(len(self.E), dtype=np.int64)
        for z, y in self.assignment.items():
            s[self.E.index(y), self.E.index(z)] = 1
        return Mat(field_, self.E, self.E, s)

    def apply(self, a: Mat) -> Mat:
        """A S: every column z gains the column assignment[z]."""
        if a.col_labels != self.E:
            a = a.select(cols=self.E)
        return a @ self.matrix(a.field)


@dataclass
class TracePass:
    name: PassName
    before: FrameTemplate
    after: FrameTemplate
    evidence: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"pass": self.name, "before": self.before.summary(), "after": self.after.summary(), "evidence": self.evidence}


@dataclass
class ReductionTrace:
    passes: list[TracePass] = field(default_factory=list)
    fresh_counter: int = 0

    def record(self, name: PassName, before: FrameTemplate, after: FrameTemplate, **evidence):
        self.passes.append(TracePass(name, before, after, dict(evidence)))

    def __len__(self) -> int:
        return len(self.passes)

    def __iter__(self):
        return iter(self.passes)

    def to_list(self) -> list[dict[str, Any]]:
        return [step.to_dict() for step in self.passes]


class FreshLabels:
    """Generator of labels c#1, x#1, ... that avoid a set of used labels."""

    def __init__(self, used: set[str] | None = None, counter: int = 0):
        self.used = set(used or ())
        self.counter = counter

    def take(self, prefix: str) -> str:
        while True:
            self.counter += 1
            label = f"{prefix}#{self.counter}"
            if label not in self.used:
                self.used.add(label)
                return label

    def block(self, prefix: str, n: int) -> tuple[str, ...]:
        return tuple(self.take(prefix) for _ in range(n))
