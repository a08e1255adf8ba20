from framelab.matroid.cache import IsoClassCache
from framelab.matroid.connectivity import connectivity, is_affine_restriction, is_vertically_k_connected
from framelab.matroid.isomorphism import (
    Fingerprint,
    find_restriction,
    fingerprint,
    is_isomorphic,
    max_line_size,
    same_matroid,
)
from framelab.matroid.models import IsoCertificate, MinorCertificate
from framelab.matroid.rank import RankOracle
from framelab.matroid.represented import RepresentedMatroid, normalize_column

__all__ = [
    "Fingerprint",
    "IsoCertificate",
    "IsoClassCache",
    "MinorCertificate",
    "RankOracle",
    "RepresentedMatroid",
    "connectivity",
    "find_restriction",
    "fingerprint",
    "is_affine_restriction",
    "is_isomorphic",
    "is_vertically_k_connected",
    "max_line_size",
    "normalize_column",
    "same_matroid",
]
