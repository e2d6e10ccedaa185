"""
Seeded random modules, pairs and morphisms for the property suites.

Random modules are quotients of small free modules by random cyclic
submodules. Random morphisms are random elements of the hom space, so
they always satisfy the intertwining equations.
"""

from __future__ import annotations

import numpy as np

from src.algebra_core import linalg
from src.algebra_core.algebra import Algebra, SquareZeroExtension
from src.algebra_core.linalg import FieldArray
from src.algebra_core.lattice import spin
from src.algebra_core.modules import (
    ModuleHom,
    ModuleRep,
    annihilator_subspace,
    free_module,
    ideal_image_subspace,
    quotient_module,
)
from src.pair_category.pairs import (
    AdmissibleSES,
    PairHom,
    PairObject,
    pair_hom_space,
    ses_from_submodule,
)


def random_vectors(
    field: type[FieldArray], rng: np.random.Generator, count: int, dim: int
) -> FieldArray:
    values = rng.integers(0, field.characteristic, size=(count, dim))
    return linalg.from_ints(field, values.reshape(count, dim))


def random_combination(
    field: type[FieldArray],
    rng: np.random.Generator,
    matrices: list[FieldArray],
    shape: tuple[int, int],
) -> FieldArray:
    """A uniformly random element of the span of the matrices."""
    total = np.zeros(shape, dtype=np.int64)
    for mat in matrices:
        total += int(rng.integers(0, field.characteristic)) * linalg.as_ints(mat)
    return linalg.from_ints(field, total)


def random_submodule(
    module: ModuleRep, rng: np.random.Generator, max_generators: int = 2
) -> FieldArray:
    """Submodule spanned by a few random vectors."""
    count = int(rng.integers(0, max_generators + 1))
    if module.dim == 0 or count == 0:
        return linalg.zeros(module.field, 0, module.dim)
    return spin(module, random_vectors(module.field, rng, count, module.dim))


def random_module(
    algebra: Algebra, rng: np.random.Generator, max_rank: int = 2
) -> ModuleRep:
    """A random quotient of A^r for 1 <= r <= max_rank."""
    rank = int(rng.integers(1, max_rank + 1))
    free = free_module(algebra, rank)
    quotient, _ = quotient_module(free, random_submodule(free, rng))
    return quotient


def random_surjection(module: ModuleRep, rng: np.random.Generator) -> ModuleHom:
    """The projection onto a random quotient."""
    _, projection = quotient_module(module, random_submodule(module, rng))
    return projection


def random_pair(
    ext: SquareZeroExtension, rng: np.random.Generator, max_rank: int = 2
) -> PairObject:
    """
    A random pair (X, Y).

    Y is X * I plus a random submodule of the part of X killed by I.
    """
    X = random_module(ext.algebra, rng, max_rank)
    ideal_vectors = ext.ideal.vectors()
    lower = ideal_image_subspace(X, ideal_vectors)
    killed = annihilator_subspace(X, ideal_vectors)
    count = int(rng.integers(0, 3))
    if count and killed.shape[0]:
        coeffs = random_vectors(X.field, rng, count, killed.shape[0])
        extra = linalg.matmul(coeffs, killed)
    else:
        extra = linalg.zeros(X.field, 0, X.dim)
    Y = spin(X, linalg.vstack(X.field, [lower, extra], X.dim))
    return PairObject(ext, X, Y)


def random_pair_hom(
    source: PairObject, target: PairObject, rng: np.random.Generator
) -> PairHom:
    basis = pair_hom_space(source, target)
    shape = (target.X.dim, source.X.dim)
    if not basis:
        matrix = linalg.zeros(source.X.field, *shape)
    else:
        matrices = [h.matrix for h in basis]
        matrix = random_combination(source.X.field, rng, matrices, shape)
    return PairHom(source, target, ModuleHom(source.X, target.X, matrix))


def random_admissible_ses(
    ext: SquareZeroExtension, rng: np.random.Generator
) -> AdmissibleSES:
    """(K, K ∩ Y) -> (X, Y) -> (X/K, image of Y) for a random submodule K."""
    pair = random_pair(ext, rng)
    return ses_from_submodule(pair, random_submodule(pair.X, rng))


def random_b_module(
    ext: SquareZeroExtension, rng: np.random.Generator, max_rank: int = 2
) -> ModuleRep:
    return random_module(ext.b_algebra, rng, max_rank)
