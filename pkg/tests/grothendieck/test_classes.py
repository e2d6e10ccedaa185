import numpy as np
import pytest

from src.algebra_core.modules import direct_sum, regular_module, zero_module
from src.grothendieck.checks import adjoint_matrix
from src.grothendieck.classes import K0Class, gamma, gamma_with, k0_class
from src.pair_category.pairs import make_pair
from src.utils.errors import QuotientNotInB

RANKS = {
    "dual_numbers_f2": (1, 1, 2),
    "fat_point_f2": (1, 1, 2),
    "triangular2_f2": (2, 2, 4),
}


@pytest.mark.parametrize("name", sorted(RANKS))
def test_ranks(contexts, name):
    ctx = contexts[name]
    assert tuple(ctx.rank(c) for c in ("A", "B", "C")) == RANKS[name]


def test_class_of_regular_module(dual, dual_ctx):
    assert k0_class(dual_ctx, regular_module(dual.algebra)).coords == (2,)
    assert k0_class(dual_ctx, zero_module(dual.algebra)).is_zero()


def test_gamma_examples(dual, dual_ctx, dual_simple):
    S, _ = dual_simple
    A = regular_module(dual.algebra)
    assert gamma(dual_ctx, A) == K0Class("B", (2,))
    assert gamma(dual_ctx, S) == K0Class("B", (1,))
    assert gamma(dual_ctx, direct_sum([A, S]).module) == K0Class("B", (3,))


def test_gamma_rejects_bad_subobject(dual, dual_ctx):
    with pytest.raises(QuotientNotInB):
        empty = np.zeros((0, 2), dtype=np.int64)
        gamma_with(dual_ctx, regular_module(dual.algebra), empty)


def test_class_of_free_pair(dual, dual_ctx):
    pair = make_pair(dual, regular_module(dual.algebra), [[0, 1]])
    cls = k0_class(dual_ctx, pair)
    assert cls.category == "C" and sum(cls.coords) == 3
    adjoint = adjoint_matrix(dual_ctx, 2)
    assert [int(x) for x in adjoint.dot(cls.vector())] == [1, 1]


def test_classes_do_not_mix(dual_ctx):
    with pytest.raises(ValueError):
        dual_ctx.zero("A") + dual_ctx.zero("C")


def test_unknown_object(dual_ctx):
    with pytest.raises(TypeError):
        k0_class(dual_ctx, "S")
