import numpy as np
import pytest

from src.algebra_core import linalg
from src.algebra_core.lattice import (
    composition_factors,
    composition_series,
    simple_catalogue,
    simple_modules,
    submodule_enumerate,
)
from src.algebra_core.modules import (
    direct_sum,
    quotient_module,
    regular_module,
    submodule,
    zero_module,
)
from src.utils.errors import EnumerationBudgetExceeded

CAP = 1_000_000


def test_uniserial_regular_module(dual):
    A = regular_module(dual.algebra)
    subs = submodule_enumerate(A, CAP)
    assert [s.shape[0] for s in subs] == [0, 1, 2]


def test_zero_module_has_one_submodule(dual):
    assert len(submodule_enumerate(zero_module(dual.algebra), CAP)) == 1


def test_semisimple_square_has_every_subspace(dual, dual_simple):
    S, _ = dual_simple
    S2 = direct_sum([S, S]).module
    assert len(submodule_enumerate(S2, CAP)) == 5


@pytest.mark.parametrize(
    "fixture, count",
    [("dual", 1), ("fat_point", 1), ("triangular", 2), ("semisimple", 2)],
)
def test_number_of_simples(request, fixture, count):
    ext = request.getfixturevalue(fixture)
    simples = simple_modules(ext.algebra, CAP)
    assert len(simples) == count
    assert all(s.dim == 1 for s in simples)


def test_composition_factors_of_regular_modules(dual, triangular):
    dual_counts = composition_factors(
        regular_module(dual.algebra), simple_catalogue(dual.algebra, CAP)
    )
    assert list(dual_counts) == [2]
    tri_counts = composition_factors(
        regular_module(triangular.algebra), simple_catalogue(triangular.algebra, CAP)
    )
    assert sorted(int(c) for c in tri_counts) == [1, 2]


def test_composition_series_length(fat_point):
    A = regular_module(fat_point.algebra)
    chain = composition_series(A, CAP)
    assert [c.shape[0] for c in chain] == [0, 1, 2, 3]


def test_zero_module_has_no_factors(dual):
    catalogue = simple_catalogue(dual.algebra, CAP)
    counts = composition_factors(zero_module(dual.algebra), catalogue)
    assert not counts.any()


def test_budget_is_enforced(fat_point):
    A = regular_module(fat_point.algebra)
    with pytest.raises(EnumerationBudgetExceeded):
        submodule_enumerate(A, 2)


def _maximal_chains(subs):
    top = subs[-1].shape[0]

    def extend(chain):
        last = chain[-1]
        if last.shape[0] == top:
            yield chain
            return
        for s in subs:
            if s.shape[0] == last.shape[0] + 1 and linalg.contains(s, last):
                yield from extend([*chain, s])

    return list(extend([subs[0]]))


def _chain_factors(module, chain, catalogue):
    counts = np.zeros(len(catalogue), dtype=np.int64)
    for lower, upper in zip(chain, chain[1:]):
        piece, _ = submodule(module, upper)
        factor, _ = quotient_module(piece, linalg.coordinates(upper, lower))
        counts[catalogue.identify(factor)] += 1
    return counts


@pytest.mark.parametrize("fixture", ["dual", "triangular", "semisimple"])
def test_submodules_closed_under_meet_and_join(request, fixture):
    ext = request.getfixturevalue(fixture)
    A = regular_module(ext.algebra)
    subs = submodule_enumerate(A, CAP)
    keys = {linalg.subspace_key(s) for s in subs}
    for u in subs:
        for w in subs:
            meet = linalg.intersection(u, w)
            join = linalg.subspace_sum(A.field, [u, w], A.dim)
            assert linalg.subspace_key(meet) in keys
            assert linalg.subspace_key(join) in keys


def test_square_of_simple_is_closed_under_meet_and_join(dual, dual_simple):
    S, _ = dual_simple
    S2 = direct_sum([S, S]).module
    subs = submodule_enumerate(S2, CAP)
    keys = {linalg.subspace_key(s) for s in subs}
    for u in subs:
        for w in subs:
            assert linalg.subspace_key(linalg.intersection(u, w)) in keys
            sum_key = linalg.subspace_key(linalg.subspace_sum(S2.field, [u, w], 2))
            assert sum_key in keys


@pytest.mark.parametrize("fixture", ["triangular", "semisimple"])
def test_every_maximal_chain_has_the_same_factors(request, fixture):
    ext = request.getfixturevalue(fixture)
    A = regular_module(ext.algebra)
    catalogue = simple_catalogue(ext.algebra, CAP)
    chains = _maximal_chains(submodule_enumerate(A, CAP))
    assert len(chains) >= 2
    expected = composition_factors(A, catalogue)
    for chain in chains:
        assert list(_chain_factors(A, chain, catalogue)) == list(expected)


def test_two_chains_through_different_simples(dual, dual_simple):
    S, _ = dual_simple
    S2 = direct_sum([S, S]).module
    catalogue = simple_catalogue(dual.algebra, CAP)
    zero = linalg.zeros(S2.field, 0, 2)
    whole = linalg.identity(S2.field, 2)
    first = [zero, linalg.from_ints(S2.field, [[1, 0]]), whole]
    second = [zero, linalg.from_ints(S2.field, [[0, 1]]), whole]
    assert list(_chain_factors(S2, first, catalogue)) == [2]
    assert list(_chain_factors(S2, second, catalogue)) == [2]
