from itertools import product
from typing import Literal

from framelab.errors import PreconditionError
from framelab.linalg import GF, Mat
from framelab.matroid import RepresentedMatroid


def pg(dim: int, p: int) -> RepresentedMatroid:
    """PG(dim, p): one column per point of GF(p)^(dim+1), labelled p0, p1, ..."""
    if dim < 0:
        raise PreconditionError(f"dimension must be nonnegative, got {dim}")
    field = GF(p)
    points = field.projective_points(dim + 1)
    columns = {f"p{k}": list(v) for k, v in enumerate(points)}
    return RepresentedMatroid(Mat.from_columns(field, [f"x{i}" for i in range(dim + 1)], columns))


def ag(dim: int, p: int) -> RepresentedMatroid:
    """AG(dim, p): every vector with first coordinate 1, labelled a0, a1, ..."""
    if dim < 0:
        raise PreconditionError(f"dimension must be nonnegative, got {dim}")
    field = GF(p)
    columns = {f"a{k}": [1, *tail] for k, tail in enumerate(product(range(p), repeat=dim))}
    return RepresentedMatroid(Mat.from_columns(field, [f"x{i}" for i in range(dim + 1)], columns))


def geometry(kind: Literal["pg", "ag"], dim: int, p: int) -> RepresentedMatroid:
    if kind == "pg":
        return pg(dim, p)
    if kind == "ag":
        return ag(dim, p)
    raise PreconditionError(f"unknown geometry {kind!r}; expected pg or ag")
