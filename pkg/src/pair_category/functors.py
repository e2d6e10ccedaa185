"""
The functors between B and the category of pairs.

Φ1(X) = (X, 0) and Φ2(X) = (X, X) embed B; the left adjoint of Φ1 is
(X, Y) -> X/Y and the right adjoint of Φ2 is (X, Y) -> Y. Every pair sits
in the canonical admissible sequence Φ2(Y) -> (X, Y) -> Φ1(X/Y).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from src.algebra_core import linalg
from src.algebra_core.algebra import SquareZeroExtension
from src.algebra_core.linalg import FieldArray
from src.algebra_core.modules import (
    ModuleHom,
    ModuleRep,
    annihilated_by,
    corestrict,
    factor_through_quotient,
    hom_dimension,
    ideal_image_subspace,
    inflate,
    quotient_module,
    restrict,
    submodule,
)
from src.algebra_core.lattice import submodule_enumerate
from src.pair_category.pairs import (
    AdmissibleSES,
    PairHom,
    PairObject,
    pair_hom_space,
)
from src.utils.errors import NotInB, VerificationFailure


def as_a_module(ext: SquareZeroExtension, module: ModuleRep) -> ModuleRep:
    """
    An object of B as an A-module.

    A/I-modules are inflated; A-modules are accepted when I kills them.

    Raises:
        NotInB: If an A-module is not annihilated by I
    """
    if module.algebra is ext.b_algebra:
        return inflate(module, ext.quotient)
    if module.algebra is ext.algebra:
        if not annihilated_by(module, ext.ideal.vectors()):
            raise NotInB("Module is not annihilated by the ideal")
        return module
    raise NotInB("Module is over neither A nor A/I")


def phi1(ext: SquareZeroExtension, module: ModuleRep) -> PairObject:
    """Φ1(X) = (X, 0)."""
    X = as_a_module(ext, module)
    return PairObject(ext, X, linalg.zeros(ext.field, 0, X.dim))


def phi2(ext: SquareZeroExtension, module: ModuleRep) -> PairObject:
    """Φ2(X) = (X, X)."""
    X = as_a_module(ext, module)
    return PairObject(ext, X, linalg.identity(ext.field, X.dim))


def phi1_hom(ext: SquareZeroExtension, f: ModuleHom) -> PairHom:
    source, target = phi1(ext, f.source), phi1(ext, f.target)
    return PairHom(source, target, ModuleHom(source.X, target.X, f.matrix))


def phi2_hom(ext: SquareZeroExtension, f: ModuleHom) -> PairHom:
    source, target = phi2(ext, f.source), phi2(ext, f.target)
    return PairHom(source, target, ModuleHom(source.X, target.X, f.matrix))


def phi1_left_adjoint(pair: PairObject) -> ModuleRep:
    """Φ1^L(X, Y) = X/Y as an A/I-module."""
    quotient, _ = quotient_module(pair.X, pair.Y, "X/Y")
    return restrict(quotient, pair.ext.quotient)


def phi2_right_adjoint(pair: PairObject) -> ModuleRep:
    """Φ2^R(X, Y) = Y as an A/I-module."""
    sub, _ = submodule(pair.X, pair.Y, "Y")
    return restrict(sub, pair.ext.quotient)


def phi1_left_adjoint_hom(h: PairHom) -> ModuleHom:
    """The map X/Y -> X'/Y' induced by h."""
    source_q, source_proj = quotient_module(h.source.X, h.source.Y)
    target_q, target_proj = quotient_module(h.target.X, h.target.Y)
    induced = factor_through_quotient(h.f.then(target_proj), source_proj)
    source = restrict(source_q, h.source.ext.quotient)
    target = restrict(target_q, h.target.ext.quotient)
    return ModuleHom(source, target, induced.matrix)


def phi2_right_adjoint_hom(h: PairHom) -> ModuleHom:
    """The restriction Y -> Y' of h."""
    source_y, source_inc = submodule(h.source.X, h.source.Y)
    target_y, target_inc = submodule(h.target.X, h.target.Y)
    restricted = corestrict(source_inc.then(h.f), target_inc)
    source = restrict(source_y, h.source.ext.quotient)
    target = restrict(target_y, h.target.ext.quotient)
    return ModuleHom(source, target, restricted.matrix)


@dataclass(frozen=True)
class AdjunctionCount:
    """Hom dimensions on both sides of an adjunction for one pair of objects."""

    left: int
    right: int

    @property
    def agrees(self) -> bool:
        return self.left == self.right


def phi1_adjunction_count(pair: PairObject, module: ModuleRep) -> AdjunctionCount:
    """dim Hom_B(Φ1^L P, N) against dim Hom_E(P, Φ1 N)."""
    return AdjunctionCount(
        hom_dimension(phi1_left_adjoint(pair), module),
        len(pair_hom_space(pair, phi1(pair.ext, module))),
    )


def phi2_adjunction_count(pair: PairObject, module: ModuleRep) -> AdjunctionCount:
    """dim Hom_E(Φ2 N, P) against dim Hom_B(N, Φ2^R P)."""
    return AdjunctionCount(
        len(pair_hom_space(phi2(pair.ext, module), pair)),
        hom_dimension(module, phi2_right_adjoint(pair)),
    )


def phi1_unit(pair: PairObject) -> PairHom:
    """The unit (X, Y) -> Φ1(Φ1^L(X, Y)) of the adjunction Φ1^L ⊣ Φ1."""
    quotient = phi1(pair.ext, phi1_left_adjoint(pair))
    _, projection = quotient_module(pair.X, pair.Y)
    return PairHom(pair, quotient, ModuleHom(pair.X, quotient.X, projection.matrix))


def phi2_counit(pair: PairObject) -> PairHom:
    """The counit Φ2(Φ2^R(X, Y)) -> (X, Y) of the adjunction Φ2 ⊣ Φ2^R."""
    sub = phi2(pair.ext, phi2_right_adjoint(pair))
    _, inclusion = submodule(pair.X, pair.Y)
    return PairHom(sub, pair, ModuleHom(sub.X, pair.X, inclusion.matrix))


def canonical_ses(pair: PairObject) -> AdmissibleSES:
    """
    The functorial admissible sequence Φ2(Φ2^R P) -> P -> Φ1(Φ1^L P).

    Args:
        pair (PairObject): Any pair

    Returns:
        AdmissibleSES: (Y, Y) -> (X, Y) -> (X/Y, 0)
    """
    return AdmissibleSES(phi2_counit(pair), phi1_unit(pair))


def canonical_ses_hom(h: PairHom) -> tuple[PairHom, PairHom, PairHom]:
    """The three components of the map between canonical sequences induced by h."""
    ext = h.source.ext
    return (
        phi2_hom(ext, phi2_right_adjoint_hom(h)),
        h,
        phi1_hom(ext, phi1_left_adjoint_hom(h)),
    )


def valid_subobjects(
    ext: SquareZeroExtension, X: ModuleRep, cap: int
) -> list[FieldArray]:
    """
    Every Y ⊆ X with Y and X/Y in B.

    The smallest of them is X * I.
    """
    ideal_vectors = ext.ideal.vectors()
    lower = ideal_image_subspace(X, ideal_vectors)
    result = []
    for Y in submodule_enumerate(X, cap):
        if not linalg.contains(Y, lower):
            continue
        sub, _ = submodule(X, Y)
        if annihilated_by(sub, ideal_vectors):
            result.append(Y)
    return result


def lemma_intersections(ext: SquareZeroExtension, X: ModuleRep, cap: int) -> int:
    """
    Check that X/(Y1 ∩ Y2) is in B whenever X/Y1 and X/Y2 are.

    Returns:
        int: Number of pairs (Y1, Y2) checked

    Raises:
        VerificationFailure: With the offending pair as witness
    """
    lower = ideal_image_subspace(X, ext.ideal.vectors())
    candidates = [Y for Y in submodule_enumerate(X, cap) if linalg.contains(Y, lower)]
    checked = 0
    for Y1, Y2 in itertools.combinations_with_replacement(candidates, 2):
        meet = linalg.intersection(Y1, Y2)
        if not linalg.contains(meet, lower):
            raise VerificationFailure(
                "lemma-intersections",
                "X/(Y1 ∩ Y2) is not annihilated by the ideal",
                {"Y1": linalg.as_ints(Y1).tolist(), "Y2": linalg.as_ints(Y2).tolist()},
            )
        checked += 1
    return checked
