import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.algebra_core.modules import direct_sum, regular_module
from src.auslander.c_objects import alpha, beta, make_c_object
from src.auslander.envelope import (
    canonical_v_is_unique,
    cone_sequence,
    cover_by_E,
    quotient_hom_space,
    serre_essential_surjectivity,
    torsion_decompose,
    v_solution_dimension,
)
from src.pair_category.functors import phi1, phi2
from src.pair_category.pairs import make_pair, pair_zero
from src.pair_category.sampling import random_module, random_pair

CAP = 1_000_000
SEEDS = st.integers(0, 2**32 - 1)


@pytest.fixture(scope="module")
def free_pair(dual):
    return make_pair(dual, regular_module(dual.algebra), [[0, 1]])


@pytest.fixture(scope="module")
def odd(dual, dual_simple):
    S, Sb = dual_simple
    S2 = direct_sum([Sb, Sb]).module
    return make_c_object(dual, S, S2, [[1, 0]], np.zeros((2, 1), dtype=np.int64))


def test_torsion_of_beta(dual, dual_simple):
    parts = torsion_decompose(beta(dual, dual_simple[1]))
    assert parts.torsion.dims == (0, 1)
    assert parts.torsion_free.is_zero()


def test_torsion_of_alpha(free_pair):
    parts = torsion_decompose(alpha(free_pair))
    assert parts.torsion.is_zero()
    assert parts.torsion_free.dims == (2, 1)


def test_torsion_of_mixed_quadruple(odd):
    parts = torsion_decompose(odd)
    assert parts.torsion.dims == (0, 1)
    assert parts.torsion_free.dims == (1, 1)
    assert parts.pair.dims == (1, 1)


def test_cover_of_beta(dual, dual_simple):
    cover = cover_by_E(beta(dual, dual_simple[1]))
    assert cover.generators == 0
    assert [c.dims for c in cover.summands] == [(1, 1)]
    assert cover.epi.is_epi()


def test_cover_of_free_pair(free_pair):
    cover = cover_by_E(alpha(free_pair))
    assert cover.generators == 1
    assert cover.summands[0].dims == (2, 1)
    assert cover.epi.is_epi()


def test_cover_of_mixed_quadruple(odd):
    cover = cover_by_E(odd)
    assert [c.dims for c in cover.summands] == [(2, 1), (2, 2)]
    assert cover.epi.is_epi()


def test_cone_sequence(dual, dual_simple):
    sequence = cone_sequence(dual, dual_simple[1])
    assert sequence.is_exact()
    assert sequence.second.target.dims == (0, 1)


def test_canonical_v(free_pair, odd):
    assert canonical_v_is_unique(free_pair)
    assert v_solution_dimension(odd.ext, odd.X, odd.Y, odd.u) >= 0


def test_quotient_homs_from_free_pair(free_pair):
    report = quotient_hom_space(free_pair, free_pair, CAP)
    assert report.dimension == 2 and report.agrees


def test_quotient_homs_between_simples(dual, dual_simple):
    S, _ = dual_simple
    report = quotient_hom_space(phi1(dual, S), phi2(dual, S), CAP)
    assert report.dimension == 1 and report.agrees


def test_quotient_homs_from_zero(dual, free_pair):
    report = quotient_hom_space(pair_zero(dual), free_pair, CAP)
    assert report.dimension == 0 and report.agrees


@given(SEEDS)
def test_random_pairs_have_no_torsion(ext, seed):
    parts = torsion_decompose(alpha(random_pair(ext, np.random.default_rng(seed))))
    assert parts.torsion.is_zero()


@given(SEEDS)
def test_every_module_is_a_serre_image(ext, seed):
    module = random_module(ext.algebra, np.random.default_rng(seed))
    assert serre_essential_surjectivity(ext, module).X.dim == module.dim


@given(SEEDS)
def test_random_covers_are_epimorphisms(ext, seed):
    c = alpha(random_pair(ext, np.random.default_rng(seed)))
    assert cover_by_E(c).epi.is_epi()
