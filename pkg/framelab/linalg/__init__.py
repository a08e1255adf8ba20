from framelab.linalg.field import GF, PrimeField, SubgroupGamma
from framelab.linalg.matrix import Mat, RowReduction, inverse, kernel, rref, row_transform, solve
from framelab.linalg.subspace import Subspace, complementary_projection
from framelab.linalg.equivalence import projective_normal_form, projectively_equivalent

__all__ = [
    "GF",
    "Mat",
    "PrimeField",
    "RowReduction",
    "SubgroupGamma",
    "Subspace",
    "complementary_projection",
    "inverse",
    "kernel",
    "projective_normal_form",
    "projectively_equivalent",
    "row_transform",
    "rref",
    "solve",
]
