"""
Check suites run against one instance.

Each suite takes the instance workbench and a seeded generator, raises
VerificationFailure on the first counterexample and otherwise returns a
dict of counts and matrices. run_suite turns these into CheckResults.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

import numpy as np

from src.algebra_core import linalg
from src.algebra_core.lattice import submodule_enumerate
from src.algebra_core.modules import hom_dimension, quotient_module, submodule
from src.auslander.auslander_algebra import AuslanderAlgebra, corner_algebras
from src.auslander.c_objects import (
    CObject,
    alpha,
    beta,
    c_hom_space,
    is_in_alpha_image,
    is_in_beta_image,
)
from src.auslander.d_modules import (
    c_object_d_module_roundtrip,
    from_d_module,
    same_c_object,
    to_d_module,
)
from src.auslander.envelope import (
    canonical_v_is_unique,
    cokernel_of_u_in_b,
    cone_sequence,
    cover_by_E,
    quotient_hom_space,
    serre_essential_surjectivity,
    torsion_decompose,
)
from src.auslander.functors import i_adjunction_count, j_hom, jtilde_to_j
from src.cli.config import InstanceConfig, RunOptions
from src.grothendieck.checks import (
    check_devissage_k0,
    check_gamma_well_defined,
    check_localization_k0,
    check_oracle_crosscheck,
    check_sod_k0,
    check_theta_composition,
)
from src.grothendieck.classes import K0Context, build_k0_context, k0_class
from src.pair_category.functors import (
    canonical_ses,
    lemma_intersections,
    phi1_adjunction_count,
    phi2_adjunction_count,
)
from src.pair_category.pairs import (
    is_strict_epi,
    is_strict_mono,
    pair_pullback,
    pair_pushout,
    strictness,
    validate_admissible,
)
from src.pair_category.sampling import (
    random_admissible_ses,
    random_b_module,
    random_module,
    random_pair,
    random_pair_hom,
    random_submodule,
    random_surjection,
)
from src.utils.config_utils import WORKBENCH_CONFIG, default_dim_bound
from src.utils.errors import (
    InvalidInput,
    NotAdmissible,
    VerificationFailure,
    WorkbenchError,
)

SUITES: tuple[str, ...] = tuple(WORKBENCH_CONFIG["suites"])


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    details: dict = field(default_factory=dict)
    witness: dict = field(default_factory=dict)
    message: str = ""
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class Workbench:
    """One instance with its run options; expensive pieces are built on first use."""

    def __init__(self, config: InstanceConfig, options: RunOptions):
        self.config = config
        self.options = options
        self.ext = config.ext

    @cached_property
    def ctx(self) -> K0Context:
        return build_k0_context(self.ext, self.options.cap)

    @property
    def aus(self) -> AuslanderAlgebra:
        return self.ctx.aus

    @property
    def d_dim_bound(self) -> int:
        return min(self.options.dim_bound, default_dim_bound(self.aus.algebra.dim))

    def random_c_object(self, rng: np.random.Generator) -> CObject:
        """A quadruple decoded from a random cyclic D-module."""
        return from_d_module(self.aus, random_module(self.aus.algebra, rng, max_rank=1))


def _ints(matrix) -> list:
    return linalg.as_ints(matrix).tolist()


def _axioms(bench: Workbench, rng: np.random.Generator) -> dict:
    ext = bench.ext
    kinds: Counter = Counter()
    intersections = 0
    for sample in range(bench.options.samples):
        ses = random_admissible_ses(ext, rng)
        try:
            validate_admissible(ses)
        except NotAdmissible as exc:
            raise VerificationFailure(
                "axioms",
                f"sequence from a submodule is not admissible: {exc}",
                {"dims": ses.dims()},
            ) from exc

        mono = ses.first
        g = random_pair_hom(mono.source, random_pair(ext, rng), rng)
        kinds[strictness(g).value] += 1
        pushout = pair_pushout(mono, g)
        if not is_strict_mono(pushout.from_second):
            raise VerificationFailure(
                "axioms",
                "pushout of a strict monomorphism is not strict",
                {
                    "sample": sample,
                    "mono": _ints(mono.f.matrix),
                    "g": _ints(g.f.matrix),
                },
            )

        epi = ses.second
        h = random_pair_hom(random_pair(ext, rng), epi.target, rng)
        pullback = pair_pullback(epi, h)
        if not is_strict_epi(pullback.to_second):
            raise VerificationFailure(
                "axioms",
                "pullback of a strict epimorphism is not strict",
                {"sample": sample, "epi": _ints(epi.f.matrix), "h": _ints(h.f.matrix)},
            )
        intersections += lemma_intersections(ext, ses.middle.X, bench.options.cap)
    return {
        "diagrams": bench.options.samples,
        "random_map_kinds": dict(sorted(kinds.items())),
        "intersection_pairs": intersections,
    }


def _functors(bench: Workbench, rng: np.random.Generator) -> dict:
    ext = bench.ext
    first, second = corner_algebras(bench.aus)
    same_a = np.array_equal(first.structure_constants, ext.algebra.structure_constants)
    same_b = np.array_equal(
        second.structure_constants, ext.b_algebra.structure_constants
    )
    if not (same_a and same_b):
        raise VerificationFailure("functors", "corners of D differ from A and A/I", {})
    for sample in range(bench.options.samples):
        module = random_module(ext.algebra, rng)
        f = random_surjection(module, rng)
        if not j_hom(ext, f).is_surjective():
            raise VerificationFailure(
                "functors",
                "j does not preserve a surjection",
                {"sample": sample, "f": _ints(f.matrix)},
            )
        if not jtilde_to_j(ext, module).is_surjective():
            raise VerificationFailure(
                "functors",
                "ĵ(M) -> j(M) is not surjective",
                {"sample": sample, "dim": module.dim},
            )
        count = i_adjunction_count(ext, module, random_b_module(ext, rng))
        if not count.agrees:
            raise VerificationFailure(
                "functors",
                "Hom_B(i^L M, N) and Hom_A(M, i N) differ",
                {"sample": sample, "left": count.left, "right": count.right},
            )
        pair, b_module = random_pair(ext, rng), random_b_module(ext, rng)
        for name, counter in (
            ("Φ1^L ⊣ Φ1", phi1_adjunction_count),
            ("Φ2 ⊣ Φ2^R", phi2_adjunction_count),
        ):
            count = counter(pair, b_module)
            if not count.agrees:
                raise VerificationFailure(
                    "functors",
                    f"hom counts of {name} differ",
                    {"sample": sample, "left": count.left, "right": count.right},
                )
        try:
            validate_admissible(canonical_ses(pair))
        except NotAdmissible as exc:
            raise VerificationFailure(
                "functors",
                f"(Y, Y) -> (X, Y) -> (X/Y, 0) is not admissible: {exc}",
                {"sample": sample},
            ) from exc
    return {"samples": bench.options.samples, "corners": "match"}


def _envelope(bench: Workbench, rng: np.random.Generator) -> dict:
    ext, aus = bench.ext, bench.aus
    cones = [cone_sequence(ext, s) for s in bench.ctx.simples("B")]
    generators = 0
    for sample in range(bench.options.samples):
        c = bench.random_c_object(rng)
        generators += cover_by_E(c).generators
        if not cokernel_of_u_in_b(c):
            raise VerificationFailure(
                "envelope",
                "X / u(Y) is not killed by I",
                {"sample": sample, "u": _ints(c.u)},
            )
        module, decoded = c_object_d_module_roundtrip(aus, c)
        if not same_c_object(c, decoded):
            raise VerificationFailure(
                "envelope",
                "D-module round trip changed the quadruple",
                {"sample": sample},
            )
        other = bench.random_c_object(rng)
        quadruple_homs = len(c_hom_space(c, other))
        module_homs = hom_dimension(module, to_d_module(aus, other))
        if quadruple_homs != module_homs:
            raise VerificationFailure(
                "envelope",
                "hom spaces of quadruples and of D-modules differ",
                {
                    "sample": sample,
                    "quadruples": quadruple_homs,
                    "d_modules": module_homs,
                },
            )
        if not canonical_v_is_unique(random_pair(ext, rng)):
            raise VerificationFailure(
                "envelope", "v is not unique for an injective u", {"sample": sample}
            )
    return {
        "samples": bench.options.samples,
        "cones": len(cones),
        "generators": generators,
    }


def _torsion(bench: Workbench, rng: np.random.Generator) -> dict:
    ext, aus, cap = bench.ext, bench.aus, bench.options.cap
    subobjects = 0
    for sample in range(bench.options.samples):
        c = bench.random_c_object(rng)
        parts = torsion_decompose(c)
        torsion_ok = is_in_beta_image(parts.torsion)
        if not (torsion_ok and is_in_alpha_image(parts.torsion_free)):
            raise VerificationFailure(
                "torsion",
                "torsion decomposition has parts outside β(B) and α(E)",
                {
                    "sample": sample,
                    "dims": [parts.torsion.dims, parts.torsion_free.dims],
                },
            )
        N = random_b_module(ext, rng)
        if c_hom_space(beta(ext, N), alpha(random_pair(ext, rng))):
            raise VerificationFailure(
                "torsion",
                "nonzero map from β(B) to α(E)",
                {"sample": sample, "dim": N.dim},
            )
        packed = to_d_module(aus, beta(ext, N))
        for K in submodule_enumerate(packed, cap):
            sub, _ = submodule(packed, K)
            quotient, _ = quotient_module(packed, K)
            if from_d_module(aus, sub).X.dim or from_d_module(aus, quotient).X.dim:
                raise VerificationFailure(
                    "torsion",
                    "β(B) is not closed under subobjects and quotients",
                    {"sample": sample, "sub": _ints(K)},
                )
            subobjects += 1
    return {"samples": bench.options.samples, "beta_subobjects": subobjects}


def _serre(bench: Workbench, rng: np.random.Generator) -> dict:
    ext, aus, ctx = bench.ext, bench.aus, bench.ctx
    stages = 0
    for sample in range(bench.options.samples):
        module = random_module(aus.algebra, rng, max_rank=1)
        K = random_submodule(module, rng)
        sub, _ = submodule(module, K)
        quotient, _ = quotient_module(module, K)
        pieces = [from_d_module(aus, m).X for m in (sub, module, quotient)]
        classes = [k0_class(ctx, x) for x in pieces]
        if classes[1] != classes[0] + classes[2]:
            raise VerificationFailure(
                "serre",
                "π does not send a short exact sequence to one",
                {"sample": sample, "dims": [x.dim for x in pieces]},
            )
        serre_essential_surjectivity(ext, random_module(ext.algebra, rng))
        first = random_pair(ext, rng, max_rank=1)
        second = random_pair(ext, rng, max_rank=1)
        report = quotient_hom_space(first, second, bench.options.cap)
        if not report.agrees:
            raise VerificationFailure(
                "serre",
                "Hom in C/β(B) differs from Hom over A",
                {
                    "sample": sample,
                    "quotient": report.dimension,
                    "a": report.a_dimension,
                },
            )
        stages += len(report.stages)
    return {"samples": bench.options.samples, "colimit_stages": stages}


def _k0_devissage(bench: Workbench, rng: np.random.Generator) -> dict:
    dim_bound = bench.options.dim_bound
    report = check_devissage_k0(bench.ctx, dim_bound)
    report["well_defined"] = check_gamma_well_defined(bench.ctx, dim_bound)
    return report


def _k0_sod(bench: Workbench, rng: np.random.Generator) -> dict:
    return check_sod_k0(bench.ctx, bench.options.dim_bound)


def _k0_localization(bench: Workbench, rng: np.random.Generator) -> dict:
    return check_localization_k0(bench.ctx, bench.options.dim_bound)


def _k0_theta(bench: Workbench, rng: np.random.Generator) -> dict:
    return check_theta_composition(bench.ctx, bench.options.dim_bound)


def _oracle_crosscheck(bench: Workbench, rng: np.random.Generator) -> dict:
    return check_oracle_crosscheck(
        bench.ctx, bench.options.dim_bound, bench.d_dim_bound
    )


SUITE_FUNCTIONS: dict[str, Callable[[Workbench, np.random.Generator], dict]] = {
    "axioms": _axioms,
    "functors": _functors,
    "envelope": _envelope,
    "torsion": _torsion,
    "serre": _serre,
    "k0-devissage": _k0_devissage,
    "k0-sod": _k0_sod,
    "k0-localization": _k0_localization,
    "k0-theta": _k0_theta,
    "oracle-crosscheck": _oracle_crosscheck,
}


def select_suites(selector) -> list[str]:
    """
    Expand a selector ("all", a name, or a list of names) into suite names in run order.

    Raises:
        InvalidInput: For an unknown suite name
    """
    if selector is None or selector == "all":
        return list(SUITES)
    names = [selector] if isinstance(selector, str) else list(selector)
    if "all" in names:
        return list(SUITES)
    unknown = [n for n in names if n not in SUITE_FUNCTIONS]
    if unknown:
        raise InvalidInput(f"Unknown suite(s) {unknown}; choose from {list(SUITES)}")
    return [n for n in SUITES if n in names]


def run_check(bench: Workbench, name: str) -> CheckResult:
    """
    Run one suite with its own generator seeded from (seed, suite position).

    Raises:
        InvalidInput, EnumerationBudgetExceeded: With the instance and suite noted
    """
    rng = np.random.default_rng([bench.options.seed, SUITES.index(name)])
    start = time.perf_counter()
    try:
        details = SUITE_FUNCTIONS[name](bench, rng)
    except VerificationFailure as exc:
        return CheckResult(
            name,
            "fail",
            witness={**exc.witness, "seed": bench.options.seed},
            message=str(exc),
            seconds=time.perf_counter() - start,
        )
    except WorkbenchError as exc:
        exc.add_note(f"while running suite {name} on instance {bench.config.name}")
        raise
    return CheckResult(name, "pass", details, seconds=time.perf_counter() - start)


def run_suite(
    bench: Workbench,
    selector="all",
    progress: Callable[[str], None] | None = None,
) -> list[CheckResult]:
    """
    Run the selected suites in their fixed order.

    Args:
        bench (Workbench): Instance and options
        selector: "all", one suite name or a list of names
        progress (callable, optional): Called with a line before each suite

    Returns:
        list[CheckResult]: One result per suite
    """
    results = []
    for name in select_suites(selector):
        if progress:
            progress(f"Running suite {name} on {bench.config.name} ...")
        results.append(run_check(bench, name))
    return results
