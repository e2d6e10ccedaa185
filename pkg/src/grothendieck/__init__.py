"""
Grothendieck Package

Classes in K0 of the categories of A-modules, B-modules, pairs and
quadruples, the dévissage inverse γ, Smith normal forms, and the K0
checks built from them.
"""

from .checks import (
    adjoint_matrix,
    check_devissage_k0,
    check_gamma_well_defined,
    check_localization_k0,
    check_oracle_crosscheck,
    check_sod_k0,
    check_theta_composition,
    k0_summary,
)
from .classes import K0Class, K0Context, build_k0_context, gamma, gamma_with, k0_class
from .oracle import (
    K0Presentation,
    enumerate_modules,
    k0_presentation_oracle,
    pair_presentation_oracle,
)
from .smith import (
    SmithForm,
    integer_kernel,
    lattice_contains,
    lattices_equal,
    smith_normal_form,
)

__all__ = [
    "K0Class",
    "K0Context",
    "K0Presentation",
    "SmithForm",
    "adjoint_matrix",
    "build_k0_context",
    "check_devissage_k0",
    "check_gamma_well_defined",
    "check_localization_k0",
    "check_oracle_crosscheck",
    "check_sod_k0",
    "check_theta_composition",
    "enumerate_modules",
    "gamma",
    "gamma_with",
    "integer_kernel",
    "k0_class",
    "k0_presentation_oracle",
    "k0_summary",
    "lattice_contains",
    "lattices_equal",
    "pair_presentation_oracle",
    "smith_normal_form",
]
