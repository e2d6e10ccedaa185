"""
Submodule lattices, composition series and simple modules.

Everything here is brute force over F_p and guarded by an explicit
enumeration cap. Submodules are reported as echelon bases in the
coordinates of the ambient module.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from src.algebra_core import linalg
from src.algebra_core.algebra import Algebra
from src.algebra_core.linalg import FieldArray
from src.algebra_core.modules import (
    ModuleRep,
    check_budget,
    hom_dimension,
    quotient_module,
    regular_module,
    submodule,
)
from src.utils.errors import EnumerationBudgetExceeded, UnrecognizedFactor


def spin(module: ModuleRep, vectors: FieldArray) -> FieldArray:
    """
    Smallest submodule containing the given row vectors.

    Args:
        module (ModuleRep): Ambient module
        vectors (FieldArray): Generators, one per row

    Returns:
        FieldArray: Echelon basis of the generated submodule
    """
    field = module.field
    basis = linalg.row_space(linalg.with_cols(vectors, module.dim))
    while True:
        images = [linalg.matmul(act, basis.T).T for act in module.action]
        grown = linalg.subspace_sum(field, [basis, *images], module.dim)
        if grown.shape[0] == basis.shape[0]:
            return basis
        basis = grown


def submodule_enumerate(module: ModuleRep, cap: int) -> list[FieldArray]:
    """
    Every submodule of a module, each exactly once.

    Submodules are grown from 0 by adding one generator at a time.

    Args:
        module (ModuleRep): The module
        cap (int): Bound on the number of subspaces of the underlying space

    Returns:
        list[FieldArray]: Echelon bases sorted by dimension, including 0 and the module

    Raises:
        EnumerationBudgetExceeded: If F_p^dim has more than cap subspaces
    """
    field = module.field
    check_budget(field.characteristic, module.dim, cap, "submodule enumeration")
    zero = linalg.zeros(field, 0, module.dim)
    found = {linalg.subspace_key(zero): zero}
    queue = deque([zero])
    while queue:
        current = queue.popleft()
        codim = module.dim - current.shape[0]
        if codim == 0:
            continue
        _, sect = linalg.complement_projection(current, module.dim)
        for q in linalg.normalized_vectors(field, codim):
            vec = linalg.matmul(sect, q.reshape(codim, 1)).T
            grown = spin(module, linalg.vstack(field, [current, vec], module.dim))
            key = linalg.subspace_key(grown)
            if key not in found:
                found[key] = grown
                queue.append(grown)
    return sorted(
        found.values(), key=lambda b: (b.shape[0], linalg.as_ints(b).tobytes())
    )


def _minimal_submodule(module: ModuleRep, cap: int) -> FieldArray:
    """A nonzero submodule of least dimension among the cyclic ones; it is simple."""
    field = module.field
    size = linalg.count_normalized_vectors(field.characteristic, module.dim)
    if size > cap:
        raise EnumerationBudgetExceeded(cap, size, "composition series search")
    best = None
    for vec in linalg.normalized_vectors(field, module.dim):
        candidate = spin(module, vec.reshape(1, module.dim))
        if best is None or candidate.shape[0] < best.shape[0]:
            best = candidate
            if best.shape[0] == 1:
                break
    return best


def composition_series(module: ModuleRep, cap: int) -> list[FieldArray]:
    """
    A composition series 0 = M_0 < M_1 < ... < M_l = M.

    Args:
        module (ModuleRep): The module
        cap (int): Bound on the vectors searched in each quotient

    Returns:
        list[FieldArray]: Echelon bases of the chain, starting with 0

    Raises:
        EnumerationBudgetExceeded: If some quotient is too large to search
    """
    field = module.field
    current = linalg.zeros(field, 0, module.dim)
    chain = [current]
    while current.shape[0] < module.dim:
        quotient, _ = quotient_module(module, current)
        _, sect = linalg.complement_projection(current, module.dim)
        minimal = _minimal_submodule(quotient, cap)
        lifted = linalg.matmul(sect, minimal.T).T
        current = linalg.subspace_sum(field, [current, lifted], module.dim)
        chain.append(current)
    return chain


def composition_subquotients(module: ModuleRep, cap: int) -> list[ModuleRep]:
    """The simple subquotients M_k / M_(k-1) of composition_series, in order."""
    chain = composition_series(module, cap)
    factors = []
    for lower, upper in zip(chain, chain[1:]):
        piece, _ = submodule(module, upper)
        # lower in the coordinates of `upper`
        coords = linalg.coordinates(linalg.row_space(upper), lower)
        factor, _ = quotient_module(piece, coords)
        factors.append(factor)
    return factors


@dataclass(frozen=True, eq=False)
class SimpleCatalogue:
    """The pinned, ordered list of simple modules of an algebra."""

    algebra: Algebra
    simples: tuple[ModuleRep, ...]
    cap: int

    def __len__(self) -> int:
        return len(self.simples)

    def identify(self, factor: ModuleRep) -> int:
        """
        Index of the simple module isomorphic to a simple factor.

        Raises:
            UnrecognizedFactor: If no catalogued simple matches
        """
        for index, simple in enumerate(self.simples):
            # a nonzero map between simples is an isomorphism
            if simple.dim == factor.dim and hom_dimension(factor, simple) > 0:
                return index
        raise UnrecognizedFactor(
            f"Composition factor of dimension {factor.dim} matches no simple module of "
            f"{self.algebra.name or 'the algebra'}"
        )

    def factors(self, module: ModuleRep) -> np.ndarray:
        """Composition multiplicities of a module as an integer vector."""
        counts = np.zeros(len(self.simples), dtype=np.int64)
        if module.dim == 0:
            return counts
        for factor in composition_subquotients(module, self.cap):
            counts[self.identify(factor)] += 1
        return counts


def simple_modules(algebra: Algebra, cap: int) -> list[ModuleRep]:
    """
    All simple right modules, up to isomorphism.

    Every simple module is a composition factor of the regular module.

    Raises:
        EnumerationBudgetExceeded: If the regular module is too large to search
    """
    found: list[ModuleRep] = []
    for factor in composition_subquotients(regular_module(algebra), cap):
        if not any(s.dim == factor.dim and hom_dimension(factor, s) > 0 for s in found):
            found.append(factor)
    label = algebra.name or "A"
    return [
        ModuleRep(s.algebra, s.dim, s.action, f"S{index}({label})")
        for index, s in enumerate(found, 1)
    ]


def simple_catalogue(algebra: Algebra, cap: int) -> SimpleCatalogue:
    return SimpleCatalogue(algebra, tuple(simple_modules(algebra, cap)), cap)


def composition_factors(module: ModuleRep, catalogue: SimpleCatalogue) -> np.ndarray:
    """
    Multiset of composition factors as a multiplicity vector over the catalogue.

    Raises:
        EnumerationBudgetExceeded: If a quotient is too large to search
        UnrecognizedFactor: If the catalogue is incomplete
    """
    return catalogue.factors(module)
