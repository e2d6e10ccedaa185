import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from src.algebra_core import linalg
from src.algebra_core.modules import ModuleHom, hom_space, identity_hom, is_hom
from src.auslander.auslander_algebra import build_auslander_algebra
from src.auslander.c_objects import (
    alpha_hom,
    beta_hom,
    forget_hom_to_a,
    forget_hom_to_b,
    forget_to_a,
    forget_to_b,
    hom_residuals,
    serre_project_hom,
)
from src.auslander.d_modules import c_hom_to_d, to_d_module
from src.auslander.functors import (
    i_left_adjoint_hom,
    inflate_hom,
    j_hom,
    j_sequence,
    j_tilde_hom,
    jtilde_to_j,
)
from src.pair_category.pairs import PairHom
from src.pair_category.sampling import (
    random_b_module,
    random_combination,
    random_module,
    random_pair,
    random_pair_hom,
)

SEEDS = st.integers(0, 2**32 - 1)


def _random_hom(source, target, rng) -> ModuleHom:
    matrices = [h.matrix for h in hom_space(source, target)]
    shape = (target.dim, source.dim)
    return ModuleHom(
        source, target, random_combination(source.field, rng, matrices, shape)
    )


def _random_a_hom(ext, rng) -> ModuleHom:
    source = random_module(ext.algebra, rng)
    return _random_hom(source, random_module(ext.algebra, rng), rng)


def _is_c_hom(h) -> bool:
    residuals = hom_residuals(h.source, h.target, h.f, h.g)
    return all(linalg.is_zero(r) for r in residuals)


@given(SEEDS)
def test_alpha_sends_pair_maps_to_quadruple_maps(ext, seed):
    rng = np.random.default_rng(seed)
    h = random_pair_hom(random_pair(ext, rng), random_pair(ext, rng), rng)
    mapped = alpha_hom(h)
    assert _is_c_hom(mapped)
    assert linalg.equal(forget_hom_to_a(mapped).matrix, h.matrix)
    assert linalg.equal(serre_project_hom(mapped).matrix, h.matrix)


@given(SEEDS)
def test_beta_sends_b_maps_to_quadruple_maps(ext, seed):
    rng = np.random.default_rng(seed)
    g = _random_hom(random_b_module(ext, rng), random_b_module(ext, rng), rng)
    mapped = beta_hom(ext, g)
    assert _is_c_hom(mapped)
    assert forget_to_a(mapped.source).dim == 0
    assert forget_to_b(mapped.target).same_as(g.target)
    assert linalg.equal(forget_hom_to_b(mapped).matrix, g.matrix)


@given(SEEDS)
def test_quadruple_maps_become_d_module_maps(dual, dual_aus, seed):
    rng = np.random.default_rng(seed)
    h = random_pair_hom(random_pair(dual, rng), random_pair(dual, rng), rng)
    mapped = alpha_hom(h)
    source = to_d_module(dual_aus, mapped.source)
    target = to_d_module(dual_aus, mapped.target)
    packed = c_hom_to_d(mapped, source, target)
    assert is_hom(source, target, packed.matrix)


def test_d_module_maps_for_beta(triangular):
    aus = build_auslander_algebra(triangular)
    rng = np.random.default_rng(7)
    g = _random_hom(
        random_b_module(triangular, rng), random_b_module(triangular, rng), rng
    )
    mapped = beta_hom(triangular, g)
    source = to_d_module(aus, mapped.source)
    target = to_d_module(aus, mapped.target)
    assert is_hom(source, target, c_hom_to_d(mapped, source, target).matrix)


@given(SEEDS)
def test_radical_functors_on_maps(ext, seed):
    rng = np.random.default_rng(seed)
    f = _random_a_hom(ext, rng)
    for functor in (i_left_adjoint_hom, j_hom, j_tilde_hom):
        mapped = functor(ext, f)
        assert mapped.source.algebra is ext.b_algebra
        assert is_hom(mapped.source, mapped.target, mapped.matrix)


@given(SEEDS)
def test_radical_functors_preserve_identities(ext, seed):
    M = random_module(ext.algebra, np.random.default_rng(seed))
    for functor in (i_left_adjoint_hom, j_hom, j_tilde_hom):
        mapped = functor(ext, identity_hom(M))
        identity = linalg.identity(ext.field, mapped.source.dim)
        assert linalg.equal(mapped.matrix, identity)


@given(SEEDS)
def test_multiplication_map_is_natural(ext, seed):
    rng = np.random.default_rng(seed)
    f = _random_a_hom(ext, rng)
    first = jtilde_to_j(ext, f.source).then(j_hom(ext, f))
    second = j_tilde_hom(ext, f).then(jtilde_to_j(ext, f.target))
    assert linalg.equal(first.matrix, second.matrix)


@given(SEEDS)
def test_radical_sequence_is_short_exact(ext, seed):
    M = random_module(ext.algebra, np.random.default_rng(seed))
    inclusion, projection = j_sequence(ext, M)
    assert inclusion.is_injective() and projection.is_surjective()
    assert inclusion.then(projection).is_zero()
    assert inclusion.source.dim + projection.target.dim == M.dim


@given(SEEDS)
def test_inflation_on_maps(ext, seed):
    rng = np.random.default_rng(seed)
    g = _random_hom(random_b_module(ext, rng), random_b_module(ext, rng), rng)
    inflated = inflate_hom(ext, g)
    assert inflated.source.algebra is ext.algebra
    assert is_hom(inflated.source, inflated.target, inflated.matrix)


def test_alpha_preserves_identities(dual):
    pair = random_pair(dual, np.random.default_rng(3))
    mapped = alpha_hom(PairHom(pair, pair, identity_hom(pair.X)))
    assert mapped.is_iso()
    assert linalg.equal(mapped.g, linalg.identity(dual.field, mapped.source.Y.dim))
