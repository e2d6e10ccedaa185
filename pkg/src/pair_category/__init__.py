"""
Pair Category Package

The quasi-abelian category of pairs (X, Y) attached to a square-zero
ideal, its kernels, cokernels and strictness tests, and the functors
relating it to B.
"""

from .functors import (
    canonical_ses,
    lemma_intersections,
    phi1,
    phi1_adjunction_count,
    phi1_left_adjoint,
    phi2,
    phi2_adjunction_count,
    phi2_right_adjoint,
)
from .pairs import (
    AdmissibleSES,
    PairHom,
    PairObject,
    Strictness,
    make_pair,
    make_pair_hom,
    pair_cokernel,
    pair_hom_space,
    pair_kernel,
    pair_pullback,
    pair_pushout,
    strictness,
    validate_admissible,
)

__all__ = [
    "AdmissibleSES",
    "PairHom",
    "PairObject",
    "Strictness",
    "canonical_ses",
    "lemma_intersections",
    "make_pair",
    "make_pair_hom",
    "pair_cokernel",
    "pair_hom_space",
    "pair_kernel",
    "pair_pullback",
    "pair_pushout",
    "phi1",
    "phi1_adjunction_count",
    "phi1_left_adjoint",
    "phi2",
    "phi2_adjunction_count",
    "phi2_right_adjoint",
    "strictness",
    "validate_admissible",
]
