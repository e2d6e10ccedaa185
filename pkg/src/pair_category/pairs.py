"""
The category of pairs (X, Y) with Y ⊆ X, Y in B and X/Y in B.

B is the category of A/I-modules for a square-zero ideal I, so the
conditions read Y * I = 0 and X * I ⊆ Y. Kernels, cokernels, pushouts and
pullbacks are computed on the X components, with the Y components
induced as intersections and images.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from src.algebra_core import linalg
from src.algebra_core.algebra import SquareZeroExtension
from src.algebra_core.linalg import FieldArray
from src.algebra_core.modules import (
    ModuleHom,
    ModuleRep,
    annihilator_subspace,
    direct_sum,
    factor_through_quotient,
    hom_cokernel,
    hom_kernel,
    identity_hom,
    ideal_image_subspace,
    is_invariant,
    pull_back,
    push_forward,
    quotient_module,
    submodule,
    validate_hom,
    zero_module,
)
from src.utils.errors import (
    NotAdmissible,
    NotKilledByI,
    NotSubmodule,
    PairHomInvalid,
    QuotientNotInB,
)


@dataclass(frozen=True, eq=False)
class PairObject:
    """A pair (X, Y); Y is stored as an echelon basis in X's coordinates."""

    ext: SquareZeroExtension
    X: ModuleRep
    Y: FieldArray

    @property
    def dims(self) -> tuple[int, int]:
        return (self.X.dim, self.Y.shape[0])

    def is_zero(self) -> bool:
        return self.X.dim == 0

    def __repr__(self) -> str:
        return f"PairObject(dims={self.dims})"


@dataclass(frozen=True, eq=False)
class PairHom:
    source: PairObject
    target: PairObject
    f: ModuleHom

    @property
    def matrix(self) -> FieldArray:
        return self.f.matrix

    def then(self, other: "PairHom") -> "PairHom":
        """The composite other ∘ self."""
        return PairHom(self.source, other.target, self.f.then(other.f))

    def is_zero(self) -> bool:
        return self.f.is_zero()


def make_pair(ext: SquareZeroExtension, X: ModuleRep, Y_basis) -> PairObject:
    """
    Validate a pair (X, Y).

    Args:
        ext (SquareZeroExtension): The fixed (A, I)
        X (ModuleRep): An A-module
        Y_basis: Row vectors spanning Y inside X

    Returns:
        PairObject: The validated pair with Y in echelon form

    Raises:
        NotSubmodule: If Y is not invariant
        NotKilledByI: If Y * I != 0
        QuotientNotInB: If X * I is not contained in Y
    """
    if X.algebra is not ext.algebra:
        raise NotSubmodule("X must be a module over the algebra of the extension")
    field = X.field
    if not isinstance(Y_basis, linalg.FieldArray):
        raw = np.asarray(Y_basis, dtype=np.int64)
        Y_basis = linalg.from_ints(field, linalg.with_cols(raw, X.dim))
    Y = linalg.row_space(linalg.with_cols(Y_basis, X.dim))
    if not is_invariant(X, Y):
        raise NotSubmodule("Y is not closed under the algebra action")
    ideal_vectors = ext.ideal.vectors()
    annihilated = annihilator_subspace(X, ideal_vectors)
    if not linalg.contains(annihilated, Y):
        raise NotKilledByI("Y * I is nonzero")
    if not linalg.contains(Y, ideal_image_subspace(X, ideal_vectors)):
        raise QuotientNotInB("X * I is not contained in Y")
    return PairObject(ext, X, Y)


def make_pair_hom(source: PairObject, target: PairObject, f) -> PairHom:
    """
    Validate a morphism of pairs.

    Raises:
        HomInvalid: If f does not intertwine the actions
        PairHomInvalid: If f does not map Y into Y'
    """
    matrix = f.matrix if isinstance(f, ModuleHom) else f
    hom = validate_hom(source.X, target.X, matrix)
    if not linalg.contains(target.Y, push_forward(hom, source.Y)):
        raise PairHomInvalid("The map does not send Y into Y'")
    return PairHom(source, target, hom)


def pair_identity(pair: PairObject) -> PairHom:
    return PairHom(pair, pair, identity_hom(pair.X))


def pair_zero(ext: SquareZeroExtension) -> PairObject:
    zero = zero_module(ext.algebra)
    return PairObject(ext, zero, linalg.zeros(ext.field, 0, 0))


def zero_pair_hom(source: PairObject, target: PairObject) -> PairHom:
    matrix = linalg.zeros(source.X.field, target.X.dim, source.X.dim)
    return PairHom(source, target, ModuleHom(source.X, target.X, matrix))


@dataclass(frozen=True, eq=False)
class PairDirectSum:
    pair: PairObject
    inclusions: tuple[PairHom, ...]
    projections: tuple[PairHom, ...]


def pair_direct_sum(pairs: list[PairObject]) -> PairDirectSum:
    ext = pairs[0].ext
    summed = direct_sum([p.X for p in pairs])
    field = ext.field
    Y = linalg.block_diagonal(field, [p.Y for p in pairs])
    Y = linalg.row_space(linalg.with_cols(Y, summed.module.dim))
    pair = PairObject(ext, summed.module, Y)
    inclusions = tuple(
        PairHom(p, pair, inc) for p, inc in zip(pairs, summed.inclusions)
    )
    projections = tuple(
        PairHom(pair, p, proj) for p, proj in zip(pairs, summed.projections)
    )
    return PairDirectSum(pair, inclusions, projections)


def pair_kernel(h: PairHom) -> tuple[PairObject, PairHom]:
    """
    Kernel (ker f, ker f ∩ Y) with its inclusion.

    Returns:
        tuple: (kernel pair, inclusion PairHom)
    """
    K, inclusion = hom_kernel(h.f)
    Y_K = pull_back(inclusion, h.source.Y)
    kernel = PairObject(h.source.ext, K, Y_K)
    return kernel, PairHom(kernel, h.source, inclusion)


def pair_cokernel(h: PairHom) -> tuple[PairObject, PairHom]:
    """
    Cokernel (X'/f(X), image of Y') with its projection.

    Returns:
        tuple: (cokernel pair, projection PairHom)
    """
    Q, projection = hom_cokernel(h.f)
    Y_Q = push_forward(projection, h.target.Y)
    cokernel = PairObject(h.target.ext, Q, Y_Q)
    return cokernel, PairHom(h.target, cokernel, projection)


def subobject_image(h: PairHom) -> tuple[FieldArray, FieldArray]:
    """(f(X), f(Y)) as echelon bases in the target's coordinates."""
    X_basis = linalg.identity(h.source.X.field, h.source.X.dim)
    return push_forward(h.f, X_basis), push_forward(h.f, h.source.Y)


class Strictness(str, enum.Enum):
    ISO = "iso"
    STRICT_MONO = "strict_mono"
    NONSTRICT_MONO = "nonstrict_mono"
    STRICT_EPI = "strict_epi"
    NONSTRICT_EPI = "nonstrict_epi"
    NEITHER = "neither"


def is_mono(h: PairHom) -> bool:
    return h.f.is_injective()


def is_epi(h: PairHom) -> bool:
    return h.f.is_surjective()


def is_iso(h: PairHom) -> bool:
    return (
        h.f.is_iso()
        and linalg.equal(push_forward(h.f, h.source.Y), h.target.Y)
    )


def is_strict_mono(h: PairHom) -> bool:
    """Mono with h = ker(coker h) as subobjects."""
    if not is_mono(h):
        return False
    cokernel, projection = pair_cokernel(h)
    _, inclusion = pair_kernel(projection)
    kernel_image = subobject_image(inclusion)
    own_image = subobject_image(h)
    return linalg.equal(kernel_image[0], own_image[0]) and linalg.equal(
        kernel_image[1], own_image[1]
    )


def is_strict_epi(h: PairHom) -> bool:
    """Epi with h = coker(ker h) as quotients."""
    if not is_epi(h):
        return False
    _, inclusion = pair_kernel(h)
    cokernel, projection = pair_cokernel(inclusion)
    induced = factor_through_quotient(h.f, projection.f)
    return is_iso(PairHom(cokernel, h.target, induced))


def strictness(h: PairHom) -> Strictness:
    """
    Classify a morphism of pairs.

    Iso is reported first, then monos, then epis.
    """
    if is_iso(h):
        return Strictness.ISO
    if is_mono(h):
        if is_strict_mono(h):
            return Strictness.STRICT_MONO
        return Strictness.NONSTRICT_MONO
    if is_epi(h):
        if is_strict_epi(h):
            return Strictness.STRICT_EPI
        return Strictness.NONSTRICT_EPI
    return Strictness.NEITHER


@dataclass(frozen=True, eq=False)
class Pushout:
    pair: PairObject
    from_first: PairHom
    from_second: PairHom


@dataclass(frozen=True, eq=False)
class Pullback:
    pair: PairObject
    to_first: PairHom
    to_second: PairHom


def pair_pushout(f: PairHom, g: PairHom) -> Pushout:
    """
    Pushout of X1 <- Z -> X2 as the cokernel of (f, -g): Z -> X1 ⊕ X2.

    Returns:
        Pushout: The pushout pair and the cocone maps from X1 and X2
    """
    if f.source is not g.source:
        raise PairHomInvalid("Pushout needs two maps out of the same pair")
    summed = pair_direct_sum([f.target, g.target])
    field = f.f.field
    stacked = linalg.vstack(field, [f.matrix, -g.matrix], f.source.X.dim)
    stacked_hom = ModuleHom(f.source.X, summed.pair.X, stacked)
    difference = PairHom(f.source, summed.pair, stacked_hom)
    pushout, projection = pair_cokernel(difference)
    return Pushout(
        pushout,
        summed.inclusions[0].then(projection),
        summed.inclusions[1].then(projection),
    )


def pair_pullback(f: PairHom, g: PairHom) -> Pullback:
    """
    Pullback of X1 -> Z <- X2 as the kernel of (f, -g): X1 ⊕ X2 -> Z.

    Returns:
        Pullback: The pullback pair and the cone maps to X1 and X2
    """
    if f.target is not g.target:
        raise PairHomInvalid("Pullback needs two maps into the same pair")
    summed = pair_direct_sum([f.source, g.source])
    field = f.f.field
    joined = linalg.hstack(field, [f.matrix, -g.matrix], f.target.X.dim)
    joined_hom = ModuleHom(summed.pair.X, f.target.X, joined)
    difference = PairHom(summed.pair, f.target, joined_hom)
    pullback, inclusion = pair_kernel(difference)
    return Pullback(
        pullback,
        inclusion.then(summed.projections[0]),
        inclusion.then(summed.projections[1]),
    )


def pair_hom_space(source: PairObject, target: PairObject) -> list[PairHom]:
    """
    Basis of Hom_E(source, target).

    Solves the intertwining equations together with P_Y' f U_Y = 0, where
    P_Y' projects onto X'/Y' and the columns of U_Y span Y.
    """
    field = source.X.field
    eye_s = linalg.identity(field, source.X.dim)
    eye_t = linalg.identity(field, target.X.dim)
    equations = [
        [(eye_t, a_s), (-a_t, eye_s)]
        for a_s, a_t in zip(source.X.action, target.X.action)
    ]
    proj, _ = linalg.complement_projection(target.Y, target.X.dim)
    if proj.shape[0] and source.Y.shape[0]:
        equations.append([(proj, source.Y.T)])
    solutions = linalg.solve_sandwich(field, (target.X.dim, source.X.dim), equations)
    return [
        PairHom(source, target, ModuleHom(source.X, target.X, m)) for m in solutions
    ]


@dataclass(frozen=True, eq=False)
class AdmissibleSES:
    """0 -> first.source -> middle -> second.target -> 0."""

    first: PairHom
    second: PairHom

    @property
    def sub(self) -> PairObject:
        return self.first.source

    @property
    def middle(self) -> PairObject:
        return self.first.target

    @property
    def quotient(self) -> PairObject:
        return self.second.target

    def dims(self) -> list[tuple[int, int]]:
        return [self.sub.dims, self.middle.dims, self.quotient.dims]


def validate_admissible(ses: AdmissibleSES) -> AdmissibleSES:
    """
    Check that a pair of composable maps is a kernel-cokernel pair.

    Raises:
        NotAdmissible: Naming the first failing condition
    """
    first, second = ses.first, ses.second
    if first.target is not second.source:
        raise NotAdmissible("The maps are not composable")
    if not first.then(second).is_zero():
        raise NotAdmissible("The composite is nonzero")
    if not is_strict_mono(first):
        raise NotAdmissible("The first map is not a strict monomorphism")
    if not is_strict_epi(second):
        raise NotAdmissible("The second map is not a strict epimorphism")
    _, inclusion = pair_kernel(second)
    kernel_image = subobject_image(inclusion)
    first_image = subobject_image(first)
    if not (
        linalg.equal(kernel_image[0], first_image[0])
        and linalg.equal(kernel_image[1], first_image[1])
    ):
        raise NotAdmissible("The first map is not the kernel of the second")
    return ses


def ses_from_submodule(pair: PairObject, K_basis: FieldArray) -> AdmissibleSES:
    """
    The admissible sequence (K, K ∩ Y) -> (X, Y) -> (X/K, image of Y).

    Every admissible sequence with middle term (X, Y) is isomorphic to one of these.
    """
    K, inclusion = submodule(pair.X, K_basis)
    sub = PairObject(pair.ext, K, pull_back(inclusion, pair.Y))
    Q, projection = quotient_module(pair.X, K_basis)
    quotient = PairObject(pair.ext, Q, push_forward(projection, pair.Y))
    return AdmissibleSES(
        PairHom(sub, pair, inclusion), PairHom(pair, quotient, projection)
    )
