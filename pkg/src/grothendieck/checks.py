"""
K0-level checks of dévissage, the semi-orthogonal decomposition and localization.

Every check returns a report dict of plain integers and lists when it
passes and raises VerificationFailure with the offending matrices when it
does not. Matrices are written with classes as columns.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from src.algebra_core.lattice import submodule_enumerate
from src.algebra_core.modules import (
    ModuleRep,
    ideal_image_subspace,
    pull_back,
    push_forward,
    quotient_module,
    submodule,
)
from src.grothendieck.classes import (
    K0Class,
    K0Context,
    beta_matrix,
    class_matrix,
    gamma,
    gamma_matrix,
    gamma_with,
    inflation_matrix,
    k0_class,
    pair_adjoint_values,
    phi_matrix,
    pi_matrix,
)
from src.grothendieck.oracle import (
    enumerate_modules,
    k0_presentation_oracle,
    pair_presentation_oracle,
)
from src.grothendieck.smith import (
    integer_kernel,
    integer_matrix,
    lattice_contains,
    lattices_equal,
    smith_normal_form,
    solve_left,
)
from src.pair_category.functors import phi1, phi2, valid_subobjects
from src.pair_category.pairs import PairObject
from src.utils.errors import VerificationFailure

CONVENTION = "relations are [middle] - [sub] - [quotient]; [β(X)] = [Φ2 X] - [Φ1 X]"


def _listed(matrix) -> list[list[int]]:
    return [[int(x) for x in row] for row in np.asarray(matrix)]


def _identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def _same(first, second) -> bool:
    first, second = np.asarray(first), np.asarray(second)
    return first.shape == second.shape and all(
        int(a) == int(b) for a, b in zip(first.flat, second.flat)
    )


@lru_cache(maxsize=16)
def _modules(ctx: K0Context, dim_bound: int) -> tuple[ModuleRep, ...]:
    found = enumerate_modules(ctx.ext.algebra, dim_bound, ctx.catalogues["A"], ctx.cap)
    return tuple(found.modules)


def sample_pairs(ctx: K0Context, dim_bound: int) -> list[PairObject]:
    """
    The pairs (S, 0), (S, S) for every B-simple, then every (X, Y) with
    dim X <= dim_bound.

    Raises:
        EnumerationBudgetExceeded: If the module enumeration is over budget
    """
    ext = ctx.ext
    pairs = [phi1(ext, s) for s in ctx.simples("B")]
    pairs += [phi2(ext, s) for s in ctx.simples("B")]
    for module in _modules(ctx, dim_bound):
        subobjects = valid_subobjects(ext, module, ctx.cap)
        pairs += [PairObject(ext, module, Y) for Y in subobjects]
    return pairs


@lru_cache(maxsize=16)
def adjoint_matrix(ctx: K0Context, dim_bound: int) -> np.ndarray:
    """
    (Φ1^L_*, Φ2^R_*): K0(C) -> K0(B)^2, solved from sampled pairs.

    Each pair gives one column: its class in K0(C) must map to
    ([X/Y], [Y]). The classes of (S, 0) and (S, S) span K0(C) when the
    decomposition holds, so the solution is unique; the other pairs make
    the solve a consistency check.

    Raises:
        VerificationFailure: If no integer matrix fits every sampled pair
    """
    pairs = sample_pairs(ctx, dim_bound)
    classes = class_matrix([k0_class(ctx, p) for p in pairs], ctx.rank("C"))
    values = np.array([pair_adjoint_values(ctx, p) for p in pairs], dtype=np.int64).T
    solution = solve_left(classes, values)
    if solution is None:
        raise VerificationFailure(
            "k0-sod",
            "([X/Y], [Y]) is not a linear function of the class of α(X, Y)",
            {
                "classes": _listed(classes),
                "values": _listed(values),
                "pairs": len(pairs),
            },
        )
    return integer_matrix(solution)


def check_devissage_k0(ctx: K0Context, dim_bound: int) -> dict:
    """
    i_* and γ are inverse to each other, and γ is additive.

    Additivity is checked on every sequence 0 -> K -> M -> M/K -> 0 with
    dim M <= dim_bound, once with γ computed from M * I on each term and
    once with Y' = K ∩ MI and Y'' the image of MI in M/K.

    Args:
        ctx (K0Context): Instance with its simple catalogues
        dim_bound (int): Largest module dimension enumerated

    Returns:
        dict: Ranks, the two matrices and the number of sequences checked

    Raises:
        VerificationFailure: With the failing matrix product or sequence
    """
    inflation = inflation_matrix(ctx)
    gammas = gamma_matrix(ctx)
    rank_a, rank_b = ctx.rank("A"), ctx.rank("B")
    if not _same(gammas.dot(inflation), _identity(rank_b)):
        raise VerificationFailure(
            "k0-devissage",
            "γ ∘ i_* is not the identity on K0(B)",
            {"inflation": _listed(inflation), "gamma": _listed(gammas)},
        )
    if not _same(inflation.dot(gammas), _identity(rank_a)):
        raise VerificationFailure(
            "k0-devissage",
            "i_* ∘ γ is not the identity on K0(A)",
            {"inflation": _listed(inflation), "gamma": _listed(gammas)},
        )

    ideal = ctx.ext.ideal.vectors()
    sequences = 0
    for module in _modules(ctx, dim_bound):
        total = gamma(ctx, module)
        Y = ideal_image_subspace(module, ideal)
        for K in submodule_enumerate(module, ctx.cap):
            if K.shape[0] in (0, module.dim):
                continue
            sub, inclusion = submodule(module, K)
            quotient, projection = quotient_module(module, K)
            split = gamma(ctx, sub) + gamma(ctx, quotient)
            induced = gamma_with(ctx, sub, pull_back(inclusion, Y)) + gamma_with(
                ctx, quotient, push_forward(projection, Y)
            )
            if split != total or induced != total:
                raise VerificationFailure(
                    "k0-devissage",
                    "γ is not additive on a short exact sequence",
                    {
                        "dims": [sub.dim, module.dim, quotient.dim],
                        "middle": list(total.coords),
                        "sum": list(split.coords),
                        "induced": list(induced.coords),
                    },
                )
            sequences += 1

    return {
        "ranks": {"A": rank_a, "B": rank_b},
        "inflation": _listed(inflation),
        "gamma": _listed(gammas),
        "sequences": sequences,
    }


def check_gamma_well_defined(ctx: K0Context, dim_bound: int) -> dict:
    """
    [Y] + [M/Y] does not depend on the choice of Y with Y, M/Y in B.

    Returns:
        dict: Number of modules and of subobject choices compared

    Raises:
        VerificationFailure: With the two disagreeing choices
    """
    modules = _modules(ctx, dim_bound)
    choices = 0
    for module in modules:
        values: list[tuple[int, K0Class]] = []
        for Y in valid_subobjects(ctx.ext, module, ctx.cap):
            values.append((Y.shape[0], gamma_with(ctx, module, Y)))
        for dim_y, value in values[1:]:
            if value != values[0][1]:
                raise VerificationFailure(
                    "k0-devissage",
                    "γ depends on the choice of Y",
                    {
                        "module_dim": module.dim,
                        "first": [values[0][0], list(values[0][1].coords)],
                        "second": [dim_y, list(value.coords)],
                    },
                )
        choices += len(values)
    return {"modules": len(modules), "choices": choices}


def check_sod_k0(ctx: K0Context, dim_bound: int) -> dict:
    """
    (Φ1_*, Φ2_*) and (Φ1^L_*, Φ2^R_*) are inverse isomorphisms K0(B)^2 <-> K0(C).

    The adjoint matrix is solved from sampled pairs that include every
    (S, 0) and (S, S), so it inverts (Φ1_*, Φ2_*) from the left as soon as
    it exists. What is checked here is that (Φ1_*, Φ2_*) is unimodular,
    computed from its Smith form alone, and that the solved adjoints also
    invert it from the right.

    Returns:
        dict: Both matrices, the ranks and the invariants of (Φ1_*, Φ2_*)

    Raises:
        VerificationFailure: With both matrices
    """
    phi = phi_matrix(ctx)
    adjoint = adjoint_matrix(ctx, dim_bound)
    rank_b, rank_c = ctx.rank("B"), ctx.rank("C")
    witness = {"phi": _listed(phi), "adjoint": _listed(adjoint)}
    if rank_c != 2 * rank_b:
        raise VerificationFailure(
            "k0-sod",
            f"rank K0(C) = {rank_c} is not twice rank K0(B) = {rank_b}",
            witness,
        )
    form = smith_normal_form(phi)
    if form.rank != rank_c or form.torsion:
        raise VerificationFailure(
            "k0-sod",
            "(Φ1_*, Φ2_*) is not invertible over Z",
            {**witness, "invariants": list(form.invariants)},
        )
    if not _same(phi.dot(adjoint), _identity(rank_c)):
        raise VerificationFailure(
            "k0-sod", "(Φ1, Φ2) ∘ adjoints is not the identity", witness
        )
    return {
        "ranks": {"B": rank_b, "C": rank_c},
        "phi_invariants": list(form.invariants),
        **witness,
    }


def check_theta_composition(ctx: K0Context, dim_bound: int) -> dict:
    """
    [β(S)] maps to (-[S], [S]) under (Φ1^L_*, Φ2^R_*) for every B-simple S.

    Raises:
        VerificationFailure: Naming the first simple with another image
    """
    adjoint = adjoint_matrix(ctx, dim_bound)
    image = adjoint.dot(beta_matrix(ctx))
    rank_b = ctx.rank("B")
    expected = np.vstack([-_identity(rank_b), _identity(rank_b)])
    for index, simple in enumerate(ctx.simples("B")):
        if not _same(image[:, index], expected[:, index]):
            raise VerificationFailure(
                "k0-theta",
                f"β({simple.name}) does not map to (-[S], [S])",
                {"simple": index, "image": [int(x) for x in image[:, index]]},
            )
    return {"images": _listed(image), "convention": CONVENTION}


def check_localization_k0(ctx: K0Context, dim_bound: int) -> dict:
    """
    K0(B) -> K0(C) -> K0(A) -> 0 is exact.

    π_* must hit every simple class, π_* β_* must vanish and the kernel of
    π_* must equal the image of β_* as lattices. The maps are also
    reported in the (Φ1, Φ2) basis of K0(C).

    Returns:
        dict: The maps, a kernel basis and the Smith form of π_*

    Raises:
        VerificationFailure: With the matrices and the kernel basis
    """
    pi = pi_matrix(ctx)
    beta = beta_matrix(ctx)
    kernel = integer_kernel(pi)
    image = integer_matrix(beta.T)
    witness = {"pi": _listed(pi), "beta": _listed(beta), "kernel": _listed(kernel)}
    rank_a = ctx.rank("A")
    if not lattice_contains(integer_matrix(pi.T), _identity(rank_a)):
        raise VerificationFailure("k0-localization", "π_* is not surjective", witness)
    if any(int(x) for x in pi.dot(beta).flat):
        raise VerificationFailure(
            "k0-localization", "π_* ∘ β_* is nonzero", witness
        )
    if not lattices_equal(kernel, image):
        raise VerificationFailure(
            "k0-localization", "ker π_* differs from im β_*", witness
        )
    adjoint = adjoint_matrix(ctx, dim_bound)
    return {
        **witness,
        "snf_pi": smith_normal_form(pi).to_dict(),
        "beta_in_phi_basis": _listed(adjoint.dot(beta)),
        "pi_in_phi_basis": _listed(pi.dot(phi_matrix(ctx))),
        "convention": CONVENTION,
    }


def check_oracle_crosscheck(
    ctx: K0Context, dim_bound: int, d_dim_bound: int | None = None
) -> dict:
    """
    Relation-matrix presentations agree with the composition-factor ranks.

    Runs the oracle on mod-A, on mod-D and on the admissible sequences of
    pairs. Each group must be free of the expected rank with the factor
    map an isomorphism.

    Args:
        ctx (K0Context): Instance with its simple catalogues
        dim_bound (int): Bound for A-modules and for pairs
        d_dim_bound (int, optional): Bound for D-modules, dim_bound if omitted

    Raises:
        EnumerationBudgetExceeded: If an enumeration is over budget
        VerificationFailure: With the failing presentation
    """
    d_dim_bound = dim_bound if d_dim_bound is None else d_dim_bound
    runs = {
        "A": (
            k0_presentation_oracle(
                ctx.ext.algebra, dim_bound, ctx.catalogues["A"], ctx.cap
            ),
            ctx.rank("A"),
        ),
        "C": (
            k0_presentation_oracle(
                ctx.aus.algebra, d_dim_bound, ctx.catalogues["C"], ctx.cap
            ),
            ctx.rank("C"),
        ),
        "E": (pair_presentation_oracle(ctx, dim_bound), 2 * ctx.rank("B")),
    }
    report = {}
    for category, (presentation, expected) in runs.items():
        summary = presentation.to_dict()
        if presentation.rank != expected or not presentation.is_free:
            raise VerificationFailure(
                "oracle-crosscheck",
                f"K0({category}) presented with rank {presentation.rank} and torsion "
                f"{list(presentation.torsion)}, expected free of rank {expected}",
                summary,
            )
        if not presentation.factor_map_is_iso():
            raise VerificationFailure(
                "oracle-crosscheck",
                f"generators of K0({category}) do not map isomorphically "
                "to the simple basis",
                summary,
            )
        report[category] = summary
    return report


def k0_summary(ctx: K0Context, dim_bound: int) -> dict:
    """Ranks and every map between the K0 groups, without checks."""
    return {
        "ranks": {c: ctx.rank(c) for c in ("A", "B", "C")},
        "simples": {c: [s.name for s in ctx.simples(c)] for c in ("A", "B", "C")},
        "inflation": _listed(inflation_matrix(ctx)),
        "gamma": _listed(gamma_matrix(ctx)),
        "phi": _listed(phi_matrix(ctx)),
        "adjoint": _listed(adjoint_matrix(ctx, dim_bound)),
        "beta": _listed(beta_matrix(ctx)),
        "pi": _listed(pi_matrix(ctx)),
        "convention": CONVENTION,
    }
