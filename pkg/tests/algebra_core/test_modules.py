import pytest

from src.algebra_core import linalg
from src.algebra_core.modules import (
    direct_sum,
    find_isomorphism,
    hom_cokernel,
    hom_dimension,
    hom_kernel,
    identity_hom,
    quotient_module,
    regular_module,
    submodule,
    validate_hom,
    validate_module,
    zero_hom,
)
from src.utils.errors import HomInvalid, ModuleInvalid, NotSubmodule

CAP = 1_000_000


def test_identity_has_zero_kernel(dual):
    A = regular_module(dual.algebra)
    kernel, _ = hom_kernel(identity_hom(A))
    assert kernel.dim == 0


def test_projection_onto_simple_has_simple_kernel(dual):
    A = regular_module(dual.algebra)
    _, projection = quotient_module(A, [[0, 1]])
    kernel, inclusion = hom_kernel(projection)
    assert kernel.dim == 1
    assert inclusion.is_injective()


def test_inclusion_of_radical_has_simple_cokernel(dual):
    A = regular_module(dual.algebra)
    _, inclusion = submodule(A, [[0, 1]])
    cokernel, _ = hom_cokernel(inclusion)
    assert cokernel.dim == 1


def test_zero_map_cokernel_is_target(dual, dual_simple):
    S, _ = dual_simple
    S2 = direct_sum([S, S]).module
    cokernel, _ = hom_cokernel(zero_hom(S, S2))
    assert cokernel.dim == 2


def test_endomorphisms_of_free_module(ext):
    A = regular_module(ext.algebra)
    assert hom_dimension(A, A) == ext.algebra.dim


def test_non_invariant_subspace(dual):
    A = regular_module(dual.algebra)
    with pytest.raises(NotSubmodule):
        submodule(A, [[1, 0]])


def test_wrong_number_of_matrices(dual):
    with pytest.raises(ModuleInvalid):
        validate_module(dual.algebra, [[[1]]])


def test_unit_must_act_as_identity(dual):
    with pytest.raises(ModuleInvalid):
        validate_module(dual.algebra, [[[0]], [[0]]])


def test_non_intertwining_matrix(dual, dual_simple):
    A = regular_module(dual.algebra)
    S, _ = dual_simple
    # s -> 1 is not A-linear: s * t = 0 but 1 * t = t
    with pytest.raises(HomInvalid):
        validate_hom(S, A, [[1], [0]])


def test_isomorphic_presentations_are_found(triangular):
    A = regular_module(triangular.algebra)
    first = direct_sum([A, A]).module
    swap = linalg.from_ints(
        triangular.field,
        [[0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1],
         [1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]],
    )
    iso = find_isomorphism(first, first, CAP)
    assert iso is not None and iso.is_iso()
    assert validate_hom(first, first, swap).is_iso()


def test_non_isomorphic_modules(dual, dual_simple):
    A = regular_module(dual.algebra)
    S, _ = dual_simple
    S2 = direct_sum([S, S]).module
    assert find_isomorphism(A, S2, CAP) is None
