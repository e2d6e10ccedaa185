"""
Structure of the category of quadruples around the images of α and β.

Every quadruple is an extension of an α-object by a β-object, is covered
by α-objects, and becomes an A-module after killing β(B). The functions
here build the witnesses for these statements on concrete objects and
raise VerificationFailure when a witness does not behave.
"""

from __future__ import annotations

from dataclasses import dataclass

from src.algebra_core import linalg
from src.algebra_core.algebra import SquareZeroExtension
from src.algebra_core.lattice import spin
from src.algebra_core.modules import (
    ModuleRep,
    corestrict,
    free_module,
    hom_dimension,
    hom_space,
    ideal_image_subspace,
    image_basis,
    pull_back,
)
from src.algebra_core.tensor import tensor_over_algebra
from src.auslander.c_objects import (
    CHom,
    CObject,
    CShortExact,
    alpha,
    beta,
    beta_right_adjoint,
    c_direct_sum,
    c_hom_space,
    c_identity,
    jtilde_matrix,
    make_c_hom,
    serre_project,
)
from src.auslander.functors import inflate
from src.pair_category.functors import phi1, phi2, valid_subobjects
from src.pair_category.pairs import PairObject, make_pair, make_pair_hom
from src.utils.errors import InvalidInput, VerificationFailure


@dataclass(frozen=True, eq=False)
class TorsionDecomposition:
    """0 -> β(ker u) -> c -> α(X, u(Y)) -> 0."""

    torsion: CObject
    inclusion: CHom
    pair: PairObject
    torsion_free: CObject
    projection: CHom

    @property
    def sequence(self) -> CShortExact:
        return CShortExact(self.inclusion, self.projection)


def torsion_decompose(c: CObject) -> TorsionDecomposition:
    """
    Split a quadruple into its β-part and its α-part.

    Args:
        c (CObject): Any valid quadruple

    Returns:
        TorsionDecomposition: The sequence with its three terms

    Raises:
        VerificationFailure: If the sequence is not exact or maps from the
            torsion part to the quotient do not vanish
    """
    ext = c.ext
    _, inclusion = beta_right_adjoint(c)
    pair = make_pair(ext, c.X, image_basis(c.u_hom()))
    quotient = alpha(pair)
    g = corestrict(c.u_hom(), quotient.u_hom())
    projection = CHom(c, quotient, linalg.identity(ext.field, c.X.dim), g.matrix)
    result = TorsionDecomposition(
        inclusion.source, inclusion, pair, quotient, projection
    )
    if not result.sequence.is_exact():
        raise VerificationFailure(
            "torsion",
            "β(ker u) -> c -> α(X, u(Y)) is not exact",
            {"dims": [inclusion.source.dims, c.dims, quotient.dims]},
        )
    if c_hom_space(result.torsion, quotient):
        raise VerificationFailure(
            "torsion",
            "nonzero map from the torsion part to the torsion-free part",
            {"dims": [inclusion.source.dims, quotient.dims]},
        )
    return result


def cokernel_of_u_in_b(c: CObject) -> bool:
    """Whether X / u(Y) is killed by the ideal, i.e. X * I ⊆ u(Y)."""
    lower = ideal_image_subspace(c.X, c.ext.ideal.vectors())
    return linalg.contains(image_basis(c.u_hom()), lower)


def v_solution_dimension(
    ext: SquareZeroExtension, X: ModuleRep, Y: ModuleRep, u
) -> int:
    """
    Dimension of the space of v' with (X, Y, u, v + v') valid whenever
    (X, Y, u, v) is.

    The conditions on v are affine; their linear part is that v' is a
    module map ĵ(X) -> Y with v' ∘ ĵ(u) = 0 and u ∘ v' = 0.
    """
    tensor = tensor_over_algebra(X, ext.ideal)
    inflated = inflate(ext, Y)
    tensor_y = tensor_over_algebra(inflated, ext.ideal)
    ju = jtilde_matrix(u, tensor_y, tensor)

    def residuals(maps):
        (v,) = maps
        out = [
            linalg.matmul(v, a_s) - linalg.matmul(a_t, v)
            for a_s, a_t in zip(tensor.module.action, inflated.action)
        ]
        out.append(linalg.matmul(v, ju))
        out.append(linalg.matmul(u, v))
        return out

    shape = (Y.dim, tensor.module.dim)
    return len(linalg.solve_linear_maps(ext.field, [shape], residuals))


def canonical_v_is_unique(pair: PairObject) -> bool:
    """
    For u the inclusion Y -> X, the canonical v is the only one making a quadruple.
    """
    c = alpha(pair)
    return v_solution_dimension(c.ext, c.X, c.Y, c.u) == 0


@dataclass(frozen=True)
class QuotientHomReport:
    """Hom in the quotient by β(B) against Hom over A."""

    dimension: int
    a_dimension: int
    stages: tuple[tuple[int, int], ...] = ()
    witnesses: int = 0

    @property
    def agrees(self) -> bool:
        return self.dimension == self.a_dimension


def quotient_hom_space(
    first: PairObject, second: PairObject, cap: int
) -> QuotientHomReport:
    """
    Hom from α(first) to α(second) after inverting maps with β-kernel and cokernel.

    The colimit runs over Y1' ⊆ Y1 with X1/Y1' in B. Restriction along
    (X1, Y1') -> (X1, Y1) is injective on homs, so the colimit is the
    largest stage. Every A-linear f: X1 -> X2 is checked to be a map of
    pairs out of (X1, Y1 ∩ f^-1(Y2)).

    Args:
        first (PairObject): (X1, Y1)
        second (PairObject): (X2, Y2)
        cap (int): Budget for enumerating submodules of X1

    Returns:
        QuotientHomReport: Colimit dimension, dim Hom_A(X1, X2), and the
        (dim Y1', dim Hom) pairs of every stage

    Raises:
        EnumerationBudgetExceeded: If X1 has too many submodules
        VerificationFailure: If a witness subobject is not valid
    """
    ext = first.ext
    target = alpha(second)
    stages = []
    for Y in valid_subobjects(ext, first.X, cap):
        if not linalg.contains(first.Y, Y):
            continue
        stage = alpha(PairObject(ext, first.X, Y))
        stages.append((Y.shape[0], len(c_hom_space(stage, target))))
    dimension = max((d for _, d in stages), default=0)

    lower = ideal_image_subspace(first.X, ext.ideal.vectors())
    witnesses = 0
    for f in hom_space(first.X, second.X):
        Y_witness = linalg.intersection(first.Y, pull_back(f, second.Y))
        if not linalg.contains(Y_witness, lower):
            raise VerificationFailure(
                "quotient-hom",
                "Y1 ∩ f^-1(Y2) does not contain X1 * I",
                {"f": linalg.as_ints(f.matrix).tolist()},
            )
        try:
            source = make_pair(ext, first.X, Y_witness)
            make_pair_hom(source, second, f)
        except InvalidInput as exc:
            raise VerificationFailure(
                "quotient-hom",
                f"f is not a map of pairs out of Y1 ∩ f^-1(Y2): {exc}",
                {"f": linalg.as_ints(f.matrix).tolist()},
            ) from exc
        witnesses += 1

    return QuotientHomReport(
        dimension, hom_dimension(first.X, second.X), tuple(sorted(stages)), witnesses
    )


@dataclass(frozen=True, eq=False)
class Cover:
    """An epimorphism onto c from a direct sum of α-objects."""

    summands: tuple[CObject, ...]
    source: CObject
    epi: CHom
    generators: int


def _generators(module: ModuleRep) -> list[int]:
    """Indices of standard vectors chosen greedily until they generate the module."""
    chosen: list[int] = []
    span = linalg.zeros(module.field, 0, module.dim)
    unit = linalg.identity(module.field, module.dim)
    for index in range(module.dim):
        if span.shape[0] == module.dim:
            break
        if linalg.contains(span, unit[index : index + 1]):
            continue
        chosen.append(index)
        span = spin(module, unit[chosen])
    return chosen


def cover_by_E(c: CObject) -> Cover:
    """
    Cover a quadruple by α(F, F * I) ⊕ α(Y, Y).

    F is free on generators of X. On the free summand g is v ∘ ĵ(f)
    composed with the inverse of the canonical v of α(F, F * I), which is
    bijective for free F. On α(Y, Y) the map is (u, id).

    Returns:
        Cover: The summands, their direct sum and the epimorphism

    Raises:
        VerificationFailure: If the assembled map is not an epimorphism
    """
    ext = c.ext
    if c.is_zero():
        return Cover((), c, c_identity(c), 0)
    fieldtype = ext.field
    A = ext.algebra
    maps: list[tuple[CObject, object, object]] = []

    gens = _generators(c.X)
    if gens:
        F = free_module(A, len(gens))
        unit = linalg.identity(fieldtype, c.X.dim)
        columns = [
            linalg.matmul(c.X.act(A.basis_vector(r)), unit[q : q + 1].T)
            for q in gens
            for r in range(A.dim)
        ]
        f = linalg.hstack(fieldtype, columns, c.X.dim)
        FI = ideal_image_subspace(F, ext.ideal.vectors())
        free_part = alpha(make_pair(ext, F, FI))
        v_inverse = linalg.inverse(free_part.v)
        if v_inverse is None:
            raise VerificationFailure(
                "envelope",
                "canonical v of a free module is not invertible",
                {"rank": len(gens)},
            )
        g = linalg.chain(c.v, jtilde_matrix(f, free_part.tensor, c.tensor), v_inverse)
        maps.append((free_part, f, g))

    if c.Y.dim:
        y_part = alpha(phi2(ext, c.Y))
        maps.append((y_part, c.u, linalg.identity(fieldtype, c.Y.dim)))

    summed = c_direct_sum([m[0] for m in maps])
    f_total = linalg.hstack(fieldtype, [m[1] for m in maps], c.X.dim)
    g_total = linalg.hstack(fieldtype, [m[2] for m in maps], c.Y.dim)
    try:
        epi = make_c_hom(summed.obj, c, f_total, g_total)
    except InvalidInput as exc:
        raise VerificationFailure(
            "envelope", f"covering map is not a morphism: {exc}", {"dims": c.dims}
        ) from exc
    if not epi.is_epi():
        raise VerificationFailure(
            "envelope",
            "covering map is not surjective",
            {
                "dims": c.dims,
                "rank_f": linalg.rank(f_total),
                "rank_g": linalg.rank(g_total),
            },
        )
    return Cover(tuple(m[0] for m in maps), summed.obj, epi, len(gens))


def cone_sequence(ext: SquareZeroExtension, module: ModuleRep) -> CShortExact:
    """
    0 -> α(X, 0) -> α(X, X) -> β(X) -> 0 for an object X of B.

    In K0 this reads [β(X)] = [α(X, X)] - [α(X, 0)].
    """
    lower = alpha(phi1(ext, module))
    upper = alpha(phi2(ext, module))
    top = beta(ext, upper.Y)
    fieldtype = ext.field
    d = upper.X.dim
    eye = linalg.identity(fieldtype, d)
    first = make_c_hom(lower, upper, eye, linalg.zeros(fieldtype, d, 0))
    second = make_c_hom(upper, top, linalg.zeros(fieldtype, 0, d), eye)
    sequence = CShortExact(first, second)
    if not sequence.is_exact():
        raise VerificationFailure("cone", "cone sequence is not exact", {"dim": d})
    return sequence


def serre_essential_surjectivity(
    ext: SquareZeroExtension, module: ModuleRep
) -> CObject:
    """
    α(X, X * I), whose image under π is X itself.

    Raises:
        VerificationFailure: If π does not return X
    """
    XI = ideal_image_subspace(module, ext.ideal.vectors())
    c = alpha(make_pair(ext, module, XI))
    if not serre_project(c).same_as(module):
        raise VerificationFailure(
            "serre", "π(α(X, XI)) differs from X", {"dim": module.dim}
        )
    return c
