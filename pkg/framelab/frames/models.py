from dataclasses import dataclass, field
from typing import Any, Literal

from framelab.errors import LabelError, PreconditionError
from framelab.linalg import Mat, PrimeField, SubgroupGamma
from framelab.matroid import MinorCertificate, RepresentedMatroid

Variant = Literal["plain", "x-extension", "box"]


@dataclass(frozen=True)
class FrameClassParams:
    """The class of matroids with a Gamma-frame representation plus at most t extra rows."""
    gamma: SubgroupGamma
    t: int = 0

    def __post_init__(self):
        if self.t < 0:
            raise PreconditionError(f"t must be nonnegative, got {self.t}")

    @property
    def field(self) -> PrimeField:
        return self.gamma.field

    @property
    def p(self) -> int:
        return self.gamma.field.p


@dataclass(frozen=True)
class DowlingSpec:
    params: FrameClassParams
    n: int
    variant: Variant = "plain"
    x: int | None = None

    def __post_init__(self):
        t = self.params.t
        if self.n < t:
            raise PreconditionError(f"rank {self.n} is below t = {t}")
        if self.variant == "x-extension":
            if self.x is None or self.x % self.params.p == 0:
                raise PreconditionError("the x-extension needs a nonzero x")
            if self.x in self.params.gamma:
                raise PreconditionError(f"x = {self.x} lies in Gamma")
            if self.n - t < 2:
                raise PreconditionError("the x-extension needs n - t >= 2")
        elif self.variant == "box":
            if self.n - t < 3:
                raise PreconditionError("the box extension needs n - t >= 3")
        elif self.variant != "plain":
            raise PreconditionError(f"unknown Dowling variant {self.variant!r}")


@dataclass(frozen=True)
class StackedFrameRep:
    """A representation [P over Q]: arbitrary rows P above a Gamma-frame matrix Q."""
    projection: Mat
    frame: Mat
    gamma: SubgroupGamma

    def __post_init__(self):
        if self.projection.col_labels != self.frame.col_labels:
            raise LabelError("projection and frame rows must share column labels")

    @property
    def t(self) -> int:
        return self.projection.shape[0]

    @property
    def col_labels(self) -> tuple[str, ...]:
        return self.frame.col_labels

    def matrix(self) -> Mat:
        return self.projection.vstack(self.frame)

    def matroid(self) -> RepresentedMatroid:
        return RepresentedMatroid(self.matrix())

    def in_class(self, t: int) -> bool:
        """Whether this representation witnesses membership in the class with bound t."""
        from framelab.frames.dowling import is_frame_matrix

        return self.t <= t and is_frame_matrix(self.frame, self.gamma)


@dataclass
class TaggedCertificate:
    """A minor certificate together with the Dowling extension it reaches."""
    variant: Variant
    x: int | None
    host: RepresentedMatroid
    pattern: RepresentedMatroid
    certificate: MinorCertificate
    branch: str

    def validates(self) -> bool:
        return self.certificate.validates(self.host, self.pattern)


@dataclass
class ProjectionFrameData:
    """[P2 over P0] with P2 holding t rows and [P1 over P0] row-equivalent to `frame`."""
    p2: Mat
    p0: Mat
    p1: Mat
    frame: Mat


@dataclass
class WitnessReport:
    claim: str
    computed: dict[str, Any] = field(default_factory=dict)
    verdict: bool = True
    notes: list[str] = field(default_factory=list)

    def check(self, name: str, value: Any, expected: Any) -> bool:
        """Record a computed value against its expected value."""
        ok = value == expected
        self.computed[name] = {"value": value, "expected": expected, "ok": ok}
        self.verdict = self.verdict and ok
        return ok

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "computed": self.computed,
            "verdict": "pass" if self.verdict else "fail",
            "notes": list(self.notes),
        }
