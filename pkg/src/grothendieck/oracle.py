"""
Brute-force presentations of K0 from short exact sequences.

Objects up to a dimension bound are enumerated up to isomorphism, every
short exact sequence among them becomes a relation row
[middle] - [sub] - [quotient], and the Smith normal form of the relation
matrix gives the group. This does not use composition series, so it is
an independent check of the class computations in classes.py.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from src.algebra_core import linalg
from src.algebra_core.algebra import Algebra
from src.algebra_core.lattice import SimpleCatalogue, submodule_enumerate
from src.algebra_core.modules import (
    ModuleHom,
    ModuleRep,
    find_isomorphism,
    hom_space,
    push_forward,
    quotient_module,
    submodule,
    validate_module,
)
from src.grothendieck.classes import K0Context, pair_adjoint_values
from src.grothendieck.smith import (
    SmithForm,
    integer_kernel,
    integer_matrix,
    lattice_contains,
    lattices_equal,
    smith_normal_form,
)
from src.pair_category.functors import valid_subobjects
from src.pair_category.pairs import PairObject, ses_from_submodule
from src.utils.errors import EnumerationBudgetExceeded


@dataclass(frozen=True, eq=False)
class K0Presentation:
    """Generators, relations and their Smith form."""

    labels: tuple[str, ...]
    relations: np.ndarray
    smith: SmithForm
    factors: np.ndarray  # one row per generator

    @property
    def rank(self) -> int:
        return self.smith.cokernel_rank()

    @property
    def torsion(self) -> tuple[int, ...]:
        return self.smith.torsion

    @property
    def is_free(self) -> bool:
        return not self.torsion

    def factor_map_is_iso(self) -> bool:
        """
        Whether generator -> factor vector identifies the cokernel with
        Z^simples.

        The relation lattice must be the kernel of the factor map and the
        factor vectors must span every coordinate vector.
        """
        simples = self.factors.shape[1]
        kernel = integer_kernel(self.factors.T)
        eye = np.eye(simples, dtype=np.int64).tolist()
        unit = integer_matrix(eye, simples, simples)
        if not lattices_equal(self.relations, kernel):
            return False
        return lattice_contains(self.factors, unit)

    def to_dict(self) -> dict:
        return {
            "generators": list(self.labels),
            "relations": len(self.relations),
            "snf": self.smith.to_dict(),
            "rank": self.rank,
            "torsion": list(self.torsion),
        }


def extensions(sub: ModuleRep, top: ModuleRep, cap: int) -> list[ModuleRep]:
    """
    Every module E = sub ⊕ top (as spaces) with sub a submodule and
    quotient top.

    The action is [[ρ_sub, Z], [0, ρ_top]] where the Z(b) solve the linear
    equations forced by the module axioms.

    Raises:
        EnumerationBudgetExceeded: If there are more than cap cocycles
    """
    algebra = sub.algebra
    fieldtype = algebra.field
    n, ds, dt = algebra.dim, sub.dim, top.dim
    consts = algebra.structure_constants

    def residuals(Z):
        out = []
        for i in range(n):
            for j in range(n):
                lhs = linalg.matmul(sub.action[j], Z[i])
                lhs = lhs + linalg.matmul(Z[j], top.action[i])
                rhs = linalg.zeros(fieldtype, ds, dt)
                for k in range(n):
                    if consts[i, j, k]:
                        rhs = rhs + int(consts[i, j, k]) * Z[k]
                out.append(lhs - rhs)
        unit_part = linalg.zeros(fieldtype, ds, dt)
        for k in range(n):
            if algebra.unit[k]:
                unit_part = unit_part + int(algebra.unit[k]) * Z[k]
        out.append(unit_part)
        return out

    basis = linalg.solve_linear_maps(fieldtype, [(ds, dt)] * n, residuals)
    flattened = [linalg.hstack(fieldtype, list(z), ds) for z in basis]
    result = []
    if flattened:
        cocycles = linalg.span_elements(fieldtype, flattened, cap)
    else:
        cocycles = [linalg.zeros(fieldtype, ds, n * dt)]
    for total in cocycles:
        ints = linalg.as_ints(total).reshape(ds, n * dt)
        action = []
        for r in range(n):
            mat = np.zeros((ds + dt, ds + dt), dtype=np.int64)
            mat[:ds, :ds] = sub.action_ints[r]
            mat[:ds, ds:] = ints[:, r * dt : (r + 1) * dt]
            mat[ds:, ds:] = top.action_ints[r]
            action.append(mat)
        result.append(validate_module(algebra, action))
    return result


@dataclass
class ModuleCatalogue:
    """Isomorphism classes of modules, with a lookup for new modules."""

    simples: SimpleCatalogue
    modules: list[ModuleRep]
    cap: int
    keys: list[tuple[int, ...]] = field(default_factory=list, repr=False)

    def factors(self, module: ModuleRep) -> tuple[int, ...]:
        return tuple(int(c) for c in self.simples.factors(module))

    def locate(self, module: ModuleRep) -> tuple[int, ModuleHom] | None:
        """Index of the catalogued module isomorphic to `module`, and the iso."""
        key = self.factors(module)
        for index, (known, known_key) in enumerate(zip(self.modules, self.keys)):
            if known.dim != module.dim or known_key != key:
                continue
            iso = find_isomorphism(module, known, self.cap)
            if iso is not None:
                return index, iso
        return None

    def add(self, module: ModuleRep) -> bool:
        if self.locate(module) is not None:
            return False
        same_dim = sum(1 for m in self.modules if m.dim == module.dim)
        name = f"M{module.dim}.{same_dim + 1}"
        self.modules.append(ModuleRep(module.algebra, module.dim, module.action, name))
        self.keys.append(self.factors(module))
        return True


def enumerate_modules(
    algebra: Algebra, dim_bound: int, catalogue: SimpleCatalogue, cap: int
) -> ModuleCatalogue:
    """
    Every module of dimension at most dim_bound, up to isomorphism.

    A module of dimension d has a simple quotient S, and its kernel has
    dimension d - dim S, so extensions of catalogued modules by simples
    reach every isomorphism class.

    Raises:
        EnumerationBudgetExceeded: If an extension space or an isomorphism
            search exceeds cap
    """
    found = ModuleCatalogue(catalogue, [], cap)
    for simple in catalogue.simples:
        if simple.dim <= dim_bound:
            found.add(simple)
    for dim in range(1, dim_bound + 1):
        for module in [m for m in found.modules if m.dim == dim]:
            for simple in catalogue.simples:
                if dim + simple.dim > dim_bound:
                    continue
                for extension in extensions(module, simple, cap):
                    found.add(extension)
    modules = found.modules
    order = sorted(range(len(modules)), key=lambda i: (modules[i].dim, modules[i].name))
    found.modules = [found.modules[i] for i in order]
    found.keys = [found.keys[i] for i in order]
    return found


def _presentation(
    labels: list[str], rows: set[tuple[int, ...]], factors: list
) -> K0Presentation:
    relations = integer_matrix(sorted(rows) if rows else [], len(rows), len(labels))
    simples = len(factors[0]) if factors else 0
    factor_matrix = integer_matrix(factors, len(labels), simples)
    smith = smith_normal_form(relations)
    return K0Presentation(tuple(labels), relations, smith, factor_matrix)


def k0_presentation_oracle(
    algebra: Algebra, dim_bound: int, catalogue: SimpleCatalogue, cap: int
) -> K0Presentation:
    """
    Present K0 of mod-algebra by modules of dimension at most dim_bound.

    Args:
        algebra (Algebra): The algebra
        dim_bound (int): Largest module dimension enumerated
        catalogue (SimpleCatalogue): Its simple modules, used only to label
            generators with composition factors for the final comparison
        cap (int): Enumeration budget

    Returns:
        K0Presentation: One relation per short exact sequence among the
        enumerated modules

    Raises:
        EnumerationBudgetExceeded: If the enumeration is over budget
    """
    found = enumerate_modules(algebra, dim_bound, catalogue, cap)
    size = len(found.modules)
    rows: set[tuple[int, ...]] = set()
    for index, module in enumerate(found.modules):
        for K in submodule_enumerate(module, cap):
            if K.shape[0] in (0, module.dim):
                continue
            sub, _ = submodule(module, K)
            quotient, _ = quotient_module(module, K)
            row = [0] * size
            row[index] += 1
            for piece in (sub, quotient):
                located = found.locate(piece)
                if located is None:
                    raise EnumerationBudgetExceeded(
                        cap, None, "module catalogue (missing subquotient)"
                    )
                row[located[0]] -= 1
            rows.add(tuple(row))
    labels = [m.name for m in found.modules]
    factors = [found.factors(m) for m in found.modules]
    return _presentation(labels, rows, factors)


def _automorphisms(module: ModuleRep, cap: int) -> list[ModuleHom]:
    basis = [h.matrix for h in hom_space(module, module)]
    return [
        ModuleHom(module, module, mat)
        for mat in linalg.span_elements(module.field, basis, cap)
        if linalg.rank(mat) == module.dim
    ]


def pair_presentation_oracle(ctx: K0Context, dim_bound: int) -> K0Presentation:
    """
    Present K0 of the exact category of pairs by its admissible sequences.

    Generators are the pairs (X, Y) with X of dimension at most dim_bound,
    up to isomorphism of pairs; every admissible sequence with such a
    middle term is a relation. Generators are labelled by
    ([X/Y], [Y]) in K0(B)^2.

    Raises:
        EnumerationBudgetExceeded: If the enumeration is over budget
    """
    ext, cap = ctx.ext, ctx.cap
    modules = enumerate_modules(ext.algebra, dim_bound, ctx.catalogues["A"], cap)
    autos = [_automorphisms(m, cap) for m in modules.modules]
    pairs: list[tuple[int, PairObject]] = []

    def locate_pair(pair: PairObject) -> int | None:
        located = modules.locate(pair.X)
        if located is None:
            return None
        index, iso = located
        moved = push_forward(iso, pair.Y)
        for position, (module_index, known) in enumerate(pairs):
            if module_index != index or known.Y.shape != moved.shape:
                continue
            for auto in autos[index]:
                if linalg.equal(push_forward(auto, moved), known.Y):
                    return position
        return None

    for index, module in enumerate(modules.modules):
        for Y in valid_subobjects(ext, module, cap):
            candidate = PairObject(ext, module, Y)
            if locate_pair(candidate) is None:
                pairs.append((index, candidate))

    rows: set[tuple[int, ...]] = set()
    for position, (_, pair) in enumerate(pairs):
        for K in submodule_enumerate(pair.X, cap):
            if K.shape[0] in (0, pair.X.dim):
                continue
            ses = ses_from_submodule(pair, K)
            row = [0] * len(pairs)
            row[position] += 1
            for piece in (ses.sub, ses.quotient):
                found = locate_pair(piece)
                if found is None:
                    raise EnumerationBudgetExceeded(
                        cap, None, "pair catalogue (missing subquotient)"
                    )
                row[found] -= 1
            rows.add(tuple(row))
    labels = [f"({pair.X.name or 'X'},{pair.Y.shape[0]})" for _, pair in pairs]
    factors = [
        tuple(int(c) for c in pair_adjoint_values(ctx, pair)) for _, pair in pairs
    ]
    return _presentation(labels, rows, factors)
