"""
Algebra Core Package

Finite-dimensional algebras over prime fields, their right modules,
submodule lattices, simple modules and tensor products with ideals.
"""

from .algebra import (
    Algebra,
    Ideal,
    QuotientAlgebra,
    SquareZeroExtension,
    algebra_from_quadruples,
    quotient_algebra,
    square_zero_extension,
    validate_algebra,
    validate_ideal,
)
from .lattice import (
    SimpleCatalogue,
    composition_factors,
    composition_series,
    simple_catalogue,
    simple_modules,
    spin,
    submodule_enumerate,
)
from .modules import (
    ModuleHom,
    ModuleRep,
    direct_sum,
    find_isomorphism,
    hom_cokernel,
    hom_kernel,
    hom_space,
    regular_module,
    validate_hom,
    validate_module,
    zero_module,
)
from .tensor import TensorProduct, tensor_hom, tensor_over_algebra

__all__ = [
    "Algebra",
    "Ideal",
    "ModuleHom",
    "ModuleRep",
    "QuotientAlgebra",
    "SimpleCatalogue",
    "SquareZeroExtension",
    "TensorProduct",
    "algebra_from_quadruples",
    "composition_factors",
    "composition_series",
    "direct_sum",
    "find_isomorphism",
    "hom_cokernel",
    "hom_kernel",
    "hom_space",
    "quotient_algebra",
    "regular_module",
    "simple_catalogue",
    "simple_modules",
    "spin",
    "square_zero_extension",
    "submodule_enumerate",
    "tensor_hom",
    "tensor_over_algebra",
    "validate_algebra",
    "validate_hom",
    "validate_ideal",
    "validate_module",
    "zero_module",
]
