import numpy as np
import pytest

from src.algebra_core.modules import direct_sum, regular_module
from src.auslander.auslander_algebra import build_auslander_algebra, corner_algebras
from src.auslander.functors import (
    i_adjunction_count,
    i_left_adjoint,
    inflate,
    j_functor,
    j_tilde,
    jtilde_to_j,
)


@pytest.mark.parametrize(
    "name, dim", [("dual_numbers_f2", 5), ("fat_point_f2", 7), ("triangular2_f2", 8)]
)
def test_dimension_of_d(configs, name, dim):
    aus = build_auslander_algebra(configs[name].ext)
    assert aus.algebra.dim == dim
    assert sorted(aus.offsets.values()) == list(aus.offsets.values())


def test_zero_ideal_gives_triangular_algebra(semisimple):
    aus = build_auslander_algebra(semisimple)
    assert aus.algebra.dim == 2 + 0 + 2 + 2


def test_idempotents_sum_to_unit(dual_aus):
    unit = np.asarray(dual_aus.algebra.unit, dtype=np.int64)
    assert np.array_equal((dual_aus.e1 + dual_aus.e2) % 2, unit)


def test_corners_are_a_and_b(ext):
    aus = build_auslander_algebra(ext)
    first, second = corner_algebras(aus)
    assert np.array_equal(first.structure_constants, ext.algebra.structure_constants)
    assert np.array_equal(second.structure_constants, ext.b_algebra.structure_constants)


def test_blocks_partition_the_basis(dual_aus):
    blocks = [dual_aus.block_of(i) for i in range(dual_aus.algebra.dim)]
    assert blocks == ["11", "11", "12", "21", "22"]


def test_inflate_keeps_dimension(dual, dual_simple):
    _, S = dual_simple
    assert inflate(dual, S).dim == 1
    assert inflate(dual, direct_sum([S, S]).module).dim == 2


def test_radical_functors_on_the_regular_module(dual):
    A = regular_module(dual.algebra)
    assert i_left_adjoint(dual, A).dim == 1
    assert j_functor(dual, A).dim == 1
    assert j_tilde(dual, A).dim == 1
    assert jtilde_to_j(dual, A).is_iso()


def test_radical_functors_on_the_simple(dual, dual_simple):
    S, _ = dual_simple
    assert i_left_adjoint(dual, S).dim == 1
    assert j_functor(dual, S).dim == 0
    assert j_tilde(dual, S).dim == 1
    to_j = jtilde_to_j(dual, S)
    assert to_j.is_surjective() and to_j.rank == 0


def test_radical_functors_are_additive(dual, dual_simple):
    S, _ = dual_simple
    A = regular_module(dual.algebra)
    assert i_left_adjoint(dual, direct_sum([A, S]).module).dim == 2
    assert j_functor(dual, direct_sum([A, A]).module).dim == 2


def test_left_adjoint_of_inclusion(dual, dual_simple):
    S, Sb = dual_simple
    A = regular_module(dual.algebra)
    for module in (A, S):
        count = i_adjunction_count(dual, module, Sb)
        assert count.agrees and count.left == 1
