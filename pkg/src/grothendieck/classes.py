"""
Classes in K0 and the maps between the K0 groups in play.

Every category here has finite length, so K0 is free on the simple
objects and a class is a vector of composition multiplicities. Classes
of quadruples and of pairs are computed over D, pairs going through α.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.algebra_core.algebra import SquareZeroExtension
from src.algebra_core.lattice import SimpleCatalogue, simple_catalogue
from src.algebra_core.modules import ModuleRep, ideal_image_subspace
from src.auslander.auslander_algebra import (
    AuslanderAlgebra,
    build_auslander_algebra,
)
from src.auslander.c_objects import CObject, alpha, beta
from src.auslander.d_modules import from_d_module, to_d_module
from src.auslander.functors import inflate
from src.pair_category.functors import (
    phi1,
    phi1_left_adjoint,
    phi2,
    phi2_right_adjoint,
)
from src.pair_category.pairs import PairObject, make_pair


@dataclass(frozen=True)
class K0Class:
    """An integer vector in the basis of simple objects of one category."""

    category: str
    coords: tuple[int, ...]

    def _check(self, other: "K0Class") -> None:
        if other.category != self.category:
            raise ValueError(
                f"Cannot combine classes in K0({self.category}) "
                f"and K0({other.category})"
            )

    def __add__(self, other: "K0Class") -> "K0Class":
        self._check(other)
        coords = tuple(a + b for a, b in zip(self.coords, other.coords))
        return K0Class(self.category, coords)

    def __sub__(self, other: "K0Class") -> "K0Class":
        return self + (-other)

    def __neg__(self) -> "K0Class":
        return K0Class(self.category, tuple(-a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def vector(self) -> np.ndarray:
        return np.array(self.coords, dtype=np.int64)

    def to_dict(self) -> dict:
        return {"category": self.category, "coords": list(self.coords)}


@dataclass(frozen=True, eq=False)
class K0Context:
    """An extension together with the simple modules of A, A/I and D."""

    ext: SquareZeroExtension
    aus: AuslanderAlgebra
    catalogues: dict[str, SimpleCatalogue]
    cap: int

    def rank(self, category: str) -> int:
        return len(self.catalogues[category])

    def simples(self, category: str) -> tuple[ModuleRep, ...]:
        return self.catalogues[category].simples

    def zero(self, category: str) -> K0Class:
        return K0Class(category, (0,) * self.rank(category))


def build_k0_context(ext: SquareZeroExtension, cap: int) -> K0Context:
    """
    Compute the simple modules of A, A/I and D once.

    Raises:
        EnumerationBudgetExceeded: If a regular module is too large to search
    """
    aus = build_auslander_algebra(ext)
    catalogues = {
        "A": simple_catalogue(ext.algebra, cap),
        "B": simple_catalogue(ext.b_algebra, cap),
        "C": simple_catalogue(aus.algebra, cap),
    }
    return K0Context(ext, aus, catalogues, cap)


def _category_of(ctx: K0Context, module: ModuleRep) -> str:
    if module.algebra is ctx.ext.algebra:
        return "A"
    if module.algebra is ctx.ext.b_algebra:
        return "B"
    if module.algebra is ctx.aus.algebra:
        return "C"
    raise ValueError("Module is over none of A, A/I and D")


def k0_class(ctx: K0Context, obj) -> K0Class:
    """
    Class of a module, a pair or a quadruple.

    Pairs are sent through α, so their classes live in K0(C).

    Raises:
        EnumerationBudgetExceeded: If a composition series is too large to compute
    """
    if isinstance(obj, PairObject):
        obj = alpha(obj)
    if isinstance(obj, CObject):
        obj = to_d_module(ctx.aus, obj)
    if not isinstance(obj, ModuleRep):
        raise TypeError(f"No K0 class for {type(obj).__name__}")
    category = _category_of(ctx, obj)
    counts = ctx.catalogues[category].factors(obj)
    return K0Class(category, tuple(int(c) for c in counts))


def gamma_with(ctx: K0Context, module: ModuleRep, Y_basis) -> K0Class:
    """
    [Y] + [M/Y] in K0(B) for an explicit Y with Y and M/Y in B.

    Raises:
        NotSubmodule, NotKilledByI, QuotientNotInB: If Y is not a valid choice
    """
    pair = make_pair(ctx.ext, module, Y_basis)
    sub = k0_class(ctx, phi2_right_adjoint(pair))
    return sub + k0_class(ctx, phi1_left_adjoint(pair))


def gamma(ctx: K0Context, module: ModuleRep) -> K0Class:
    """γ([M]) computed with Y = M * I."""
    Y_basis = ideal_image_subspace(module, ctx.ext.ideal.vectors())
    return gamma_with(ctx, module, Y_basis)


def class_matrix(classes: list[K0Class], rows: int) -> np.ndarray:
    """Columns are the coordinate vectors of the classes."""
    if not classes:
        return np.zeros((rows, 0), dtype=np.int64)
    coords = np.array([c.coords for c in classes], dtype=np.int64)
    return coords.reshape(len(classes), rows).T


def inflation_matrix(ctx: K0Context) -> np.ndarray:
    """i_*: K0(B) -> K0(A)."""
    classes = [k0_class(ctx, inflate(ctx.ext, s)) for s in ctx.simples("B")]
    return class_matrix(classes, ctx.rank("A"))


def gamma_matrix(ctx: K0Context) -> np.ndarray:
    """γ: K0(A) -> K0(B)."""
    return class_matrix([gamma(ctx, s) for s in ctx.simples("A")], ctx.rank("B"))


def phi_matrix(ctx: K0Context) -> np.ndarray:
    """(Φ1_*, Φ2_*): K0(B)^2 -> K0(C), Φ1 columns first."""
    simples = ctx.simples("B")
    classes = [k0_class(ctx, phi1(ctx.ext, s)) for s in simples]
    classes += [k0_class(ctx, phi2(ctx.ext, s)) for s in simples]
    return class_matrix(classes, ctx.rank("C"))


def beta_matrix(ctx: K0Context) -> np.ndarray:
    """β_*: K0(B) -> K0(C)."""
    classes = [k0_class(ctx, beta(ctx.ext, s)) for s in ctx.simples("B")]
    return class_matrix(classes, ctx.rank("C"))


def pi_matrix(ctx: K0Context) -> np.ndarray:
    """π_*: K0(C) -> K0(A), read off the simple D-modules."""
    classes = [k0_class(ctx, from_d_module(ctx.aus, s).X) for s in ctx.simples("C")]
    return class_matrix(classes, ctx.rank("A"))


def pair_adjoint_values(ctx: K0Context, pair: PairObject) -> np.ndarray:
    """([X/Y], [Y]) in K0(B)^2."""
    quotient = k0_class(ctx, phi1_left_adjoint(pair))
    sub = k0_class(ctx, phi2_right_adjoint(pair))
    return np.array(quotient.coords + sub.coords, dtype=np.int64)
