import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.algebra_core import linalg
from src.algebra_core.modules import quotient_module, regular_module, submodule
from src.pair_category.functors import (
    canonical_ses,
    lemma_intersections,
    phi1,
    phi1_left_adjoint,
    phi2,
    phi2_right_adjoint,
    valid_subobjects,
)
from src.pair_category.pairs import (
    AdmissibleSES,
    PairHom,
    Strictness,
    is_strict_epi,
    is_strict_mono,
    make_pair,
    make_pair_hom,
    pair_cokernel,
    pair_identity,
    pair_kernel,
    pair_pullback,
    pair_pushout,
    pair_zero,
    strictness,
    validate_admissible,
    zero_pair_hom,
)
from src.pair_category.sampling import (
    random_admissible_ses,
    random_pair,
    random_pair_hom,
)
from src.utils.errors import NotAdmissible, NotKilledByI, NotSubmodule, QuotientNotInB

CAP = 1_000_000
SEEDS = st.integers(0, 2**32 - 1)


@pytest.fixture(scope="module")
def dual_pairs(dual):
    """(A, tA), (S, 0) as A/tA, (S, S) as tA, with the maps between them."""
    A = regular_module(dual.algebra)
    free = make_pair(dual, A, [[0, 1]])
    Q, projection = quotient_module(A, [[0, 1]])
    top = make_pair(dual, Q, np.zeros((0, 1), dtype=np.int64))
    K, inclusion = submodule(A, [[0, 1]])
    bottom = make_pair(dual, K, [[1]])
    return {
        "free": free,
        "top": top,
        "bottom": bottom,
        "projection": make_pair_hom(free, top, projection),
        "inclusion": make_pair_hom(bottom, free, inclusion),
    }


def test_valid_pair(dual_pairs):
    assert dual_pairs["free"].dims == (2, 1)


def test_pair_without_radical(dual):
    with pytest.raises(QuotientNotInB):
        make_pair(dual, regular_module(dual.algebra), np.zeros((0, 2), dtype=np.int64))


def test_pair_with_unkilled_subobject(dual):
    with pytest.raises(NotKilledByI):
        make_pair(dual, regular_module(dual.algebra), [[1, 0], [0, 1]])


def test_pair_with_non_invariant_subspace(dual):
    with pytest.raises(NotSubmodule):
        make_pair(dual, regular_module(dual.algebra), [[1, 1]])


def test_kernel_of_projection(dual_pairs):
    kernel, _ = pair_kernel(dual_pairs["projection"])
    assert kernel.dims == (1, 1)


def test_cokernel_of_inclusion(dual_pairs):
    cokernel, _ = pair_cokernel(dual_pairs["inclusion"])
    assert cokernel.dims == (1, 0)


def test_strictness_examples(dual, dual_pairs):
    assert strictness(pair_identity(dual_pairs["free"])) is Strictness.ISO
    assert strictness(dual_pairs["projection"]) is Strictness.STRICT_EPI
    S = dual_pairs["top"].X
    lower, upper = phi1(dual, S), phi2(dual, S)
    identity = make_pair_hom(lower, upper, linalg.identity(dual.field, 1))
    assert strictness(identity) is Strictness.NONSTRICT_MONO


def test_pushout_along_identity(dual_pairs):
    inclusion = dual_pairs["inclusion"]
    pushout = pair_pushout(inclusion, pair_identity(dual_pairs["bottom"]))
    assert pushout.pair.dims == (2, 1)


def test_functors_and_adjoints(dual, dual_simple, dual_pairs):
    _, S = dual_simple
    assert phi1(dual, S).dims == (1, 0)
    assert phi2(dual, S).dims == (1, 1)
    free = dual_pairs["free"]
    assert phi1_left_adjoint(free).dim == 1
    assert phi2_right_adjoint(free).dim == 1
    assert phi2_right_adjoint(phi1(dual, S)).dim == 0
    assert phi1_left_adjoint(phi2(dual, S)).dim == 0


def test_canonical_sequence(dual_pairs):
    ses = validate_admissible(canonical_ses(dual_pairs["free"]))
    assert ses.dims() == [(1, 1), (2, 1), (1, 0)]


def test_nonstrict_mono_is_not_admissible(dual):
    S = quotient_module(regular_module(dual.algebra), [[0, 1]])[0]
    lower, upper = phi1(dual, S), phi2(dual, S)
    first = make_pair_hom(lower, upper, linalg.identity(dual.field, 1))
    second = zero_pair_hom(upper, pair_zero(dual))
    with pytest.raises(NotAdmissible):
        validate_admissible(AdmissibleSES(first, second))


def test_only_the_radical_is_valid_in_the_free_module(dual):
    assert len(valid_subobjects(dual, regular_module(dual.algebra), CAP)) == 1


def test_intersection_lemma(triangular):
    assert lemma_intersections(triangular, regular_module(triangular.algebra), CAP) >= 1


@given(SEEDS)
def test_strict_monos_survive_pushout(ext, seed):
    rng = np.random.default_rng(seed)
    ses = random_admissible_ses(ext, rng)
    validate_admissible(ses)
    g = random_pair_hom(ses.sub, random_pair(ext, rng), rng)
    assert is_strict_mono(pair_pushout(ses.first, g).from_second)


@given(SEEDS)
def test_strict_epis_survive_pullback(ext, seed):
    rng = np.random.default_rng(seed)
    ses = random_admissible_ses(ext, rng)
    h = random_pair_hom(random_pair(ext, rng), ses.quotient, rng)
    assert is_strict_epi(pair_pullback(ses.second, h).to_second)


@given(SEEDS)
def test_random_maps_compose_to_pair_maps(dual, seed):
    rng = np.random.default_rng(seed)
    first, second = random_pair(dual, rng), random_pair(dual, rng)
    h = random_pair_hom(first, second, rng)
    assert isinstance(make_pair_hom(first, second, h.f), PairHom)
