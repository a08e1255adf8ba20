"""Seeded random templates for fuzzing the reduction pipeline."""

import numpy as np

from framelab.linalg import GF, Mat, SubgroupGamma, Subspace
from framelab.templates.models import FrameTemplate


def _random_subspace(rng: np.random.Generator, field, ambient: tuple[str, ...], max_dim: int) -> Subspace:
    if not ambient or max_dim <= 0:
        return Subspace.zero(field, ambient)
    k = int(rng.integers(0, min(max_dim, len(ambient)) + 1))
    vectors = rng.integers(0, field.p, size=(k, len(ambient))).tolist()
    return Subspace.from_vectors(field, ambient, vectors)


def random_template(
    rng: np.random.Generator,
    p: int,
    max_complexity: int = 3,
    max_delta_dim: int = 2,
    max_lambda_dim: int = 2,
) -> FrameTemplate:
    """A template with |X| + |Y0| + |Y1| + |C| <= max_complexity and random A1, Delta, Lambda."""
    field = GF(p)
    subgroups = SubgroupGamma.all(field)
    gamma = subgroups[int(rng.integers(0, len(subgroups)))]
    total = int(rng.integers(0, max_complexity + 1))
    # Split the complexity between X, Y0, Y1 and C.
    parts = rng.multinomial(total, [0.25] * 4)
    x = tuple(f"x{i}" for i in range(1, parts[0] + 1))
    y0 = tuple(f"y0.{i}" for i in range(1, parts[1] + 1))
    y1 = tuple(f"y1.{i}" for i in range(1, parts[2] + 1))
    c = tuple(f"c{i}" for i in range(1, parts[3] + 1))
    cy = y0 + y1 + c
    a1 = Mat(field, x, cy, rng.integers(0, p, size=(len(x), len(cy))))
    delta = _random_subspace(rng, field, cy, max_delta_dim)
    lam = _random_subspace(rng, field, x, max_lambda_dim)
    return FrameTemplate(gamma, c, x, y0, y1, a1, delta, lam)


def random_frame_matrix(rng: np.random.Generator, gamma: SubgroupGamma, rows: int, cols: int) -> Mat:
    """A rows x cols exact Gamma-frame matrix with no zero columns."""
    field = gamma.field
    members = list(gamma)
    entries = np.zeros((rows, cols), dtype=np.int64)
    for j in range(cols):
        i = int(rng.integers(0, rows))
        if rows == 1 or rng.random() < 0.3:
            entries[i, j] = 1
            continue
        k = int(rng.choice([r for r in range(rows) if r != i]))
        entries[i, j] = field.neg(1)
        entries[k, j] = members[int(rng.integers(0, len(members)))]
    return Mat(field, [f"b{i}" for i in range(1, rows + 1)], [f"e{j}" for j in range(1, cols + 1)], entries)
