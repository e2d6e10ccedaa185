"""
Auslander Package

The block matrix algebra D of a square-zero extension, the category of
quadruples (X, Y, u, v) it models, the functors α, β, π, i, j and ĵ, and
the torsion pair and covering constructions inside that category.
"""

from .auslander_algebra import (
    AuslanderAlgebra,
    build_auslander_algebra,
    corner_algebras,
)
from .c_objects import (
    CHom,
    CObject,
    CShortExact,
    alpha,
    beta,
    beta_right_adjoint,
    c_direct_sum,
    c_hom_space,
    make_c_hom,
    make_c_object,
    serre_project,
)
from .d_modules import c_object_d_module_roundtrip, from_d_module, to_d_module
from .envelope import (
    cone_sequence,
    cover_by_E,
    quotient_hom_space,
    serre_essential_surjectivity,
    torsion_decompose,
)
from .functors import i_left_adjoint, inflate, j_functor, j_tilde, jtilde_to_j

__all__ = [
    "AuslanderAlgebra",
    "CHom",
    "CObject",
    "CShortExact",
    "alpha",
    "beta",
    "beta_right_adjoint",
    "build_auslander_algebra",
    "c_direct_sum",
    "c_hom_space",
    "c_object_d_module_roundtrip",
    "cone_sequence",
    "corner_algebras",
    "cover_by_E",
    "from_d_module",
    "i_left_adjoint",
    "inflate",
    "j_functor",
    "j_tilde",
    "jtilde_to_j",
    "make_c_hom",
    "make_c_object",
    "quotient_hom_space",
    "serre_essential_surjectivity",
    "serre_project",
    "to_d_module",
    "torsion_decompose",
]
