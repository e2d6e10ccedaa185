"""
Right modules over a finite-dimensional algebra and their morphisms.

A module of dimension d is given by one d x d matrix per algebra basis
element. Vectors are columns and m * b is computed as action[b] @ m, so the
right-module axiom reads action[b_j] @ action[b_i] = action[b_i * b_j].
A morphism is a target.dim x source.dim matrix F with
F @ action_source[b] = action_target[b] @ F.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from src.algebra_core import linalg
from src.algebra_core.algebra import Algebra, QuotientAlgebra
from src.algebra_core.linalg import FieldArray
from src.utils.errors import (
    EnumerationBudgetExceeded,
    HomInvalid,
    ModuleInvalid,
    NotInB,
    NotSubmodule,
)


@dataclass(frozen=True, eq=False)
class ModuleRep:
    """A finite-dimensional right module. Build it with validate_module()."""

    algebra: Algebra
    dim: int
    action: tuple[FieldArray, ...]
    name: str = ""

    @property
    def field(self) -> type[FieldArray]:
        return self.algebra.field

    @functools.cached_property
    def action_ints(self) -> np.ndarray:
        """All action matrices as one integer array of shape (n, d, d)."""
        ints = np.array([linalg.as_ints(a) for a in self.action], dtype=np.int64)
        return ints.reshape(self.algebra.dim, self.dim, self.dim)

    def act(self, element) -> FieldArray:
        """Matrix of m -> m * a for an algebra element a given by coefficients."""
        coeffs = np.asarray(element, dtype=np.int64)
        total = np.einsum("r,rab->ab", coeffs, self.action_ints) % self.algebra.char
        return linalg.from_ints(self.field, total)

    def same_as(self, other: "ModuleRep") -> bool:
        """Equal as matrices (not merely isomorphic)."""
        return (
            self.algebra is other.algebra
            and self.dim == other.dim
            and np.array_equal(self.action_ints, other.action_ints)
        )

    def __repr__(self) -> str:
        label = self.name or "M"
        algebra = self.algebra.name or self.algebra.dim
        return f"ModuleRep({label}, dim={self.dim}, algebra={algebra})"


@dataclass(frozen=True, eq=False)
class ModuleHom:
    """A module morphism. Build it with validate_hom() unless it intertwines."""

    source: ModuleRep
    target: ModuleRep
    matrix: FieldArray

    @property
    def field(self) -> type[FieldArray]:
        return self.source.field

    @property
    def rank(self) -> int:
        return linalg.rank(self.matrix)

    def is_injective(self) -> bool:
        return self.rank == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank == self.target.dim

    def is_iso(self) -> bool:
        return self.source.dim == self.target.dim and self.is_injective()

    def is_zero(self) -> bool:
        return linalg.is_zero(self.matrix)

    def then(self, other: "ModuleHom") -> "ModuleHom":
        """The composite other ∘ self."""
        if other.source.dim != self.target.dim:
            raise HomInvalid("Composable homs must share the middle module")
        matrix = linalg.matmul(other.matrix, self.matrix)
        return ModuleHom(self.source, other.target, matrix)

    def __add__(self, other: "ModuleHom") -> "ModuleHom":
        return ModuleHom(self.source, self.target, self.matrix + other.matrix)


def _ints(matrix) -> np.ndarray:
    if isinstance(matrix, linalg.FieldArray):
        return linalg.as_ints(matrix)
    return np.asarray(matrix, dtype=np.int64)


def _module(algebra: Algebra, dim: int, action, name: str = "") -> ModuleRep:
    field = algebra.field
    mats = tuple(linalg.from_ints(field, _ints(a)).reshape(dim, dim) for a in action)
    return ModuleRep(algebra, dim, mats, name)


def validate_module(algebra: Algebra, action, name: str = "") -> ModuleRep:
    """
    Validate action matrices as a right module.

    Args:
        algebra (Algebra): The acting algebra
        action: One square matrix per algebra basis element
        name (str): Optional display name

    Returns:
        ModuleRep: The validated module

    Raises:
        ModuleInvalid: If shapes are wrong, the unit does not act as the
            identity, or the right-module axiom fails
    """
    action = list(action)
    if len(action) != algebra.dim:
        raise ModuleInvalid(
            f"Expected {algebra.dim} action matrices, got {len(action)}"
        )
    ints = [_ints(a) for a in action]
    dim = ints[0].shape[0] if ints and ints[0].ndim == 2 else 0
    for r, mat in enumerate(ints):
        if mat.size == 0 and dim == 0:
            continue
        if mat.shape != (dim, dim):
            raise ModuleInvalid(
                f"Action matrix {r} has shape {mat.shape}, expected {(dim, dim)}"
            )
    module = _module(algebra, dim, [m.reshape(dim, dim) for m in ints], name)
    if dim == 0:
        return module

    p = algebra.char
    acts = module.action_ints
    unit_action = np.einsum("r,rab->ab", algebra.unit, acts) % p
    if not np.array_equal(unit_action, np.eye(dim, dtype=np.int64)):
        raise ModuleInvalid("The unit does not act as the identity")
    lhs = np.einsum("jab,ibc->ijac", acts, acts) % p
    rhs = np.einsum("ijk,kac->ijac", algebra.structure_constants, acts) % p
    bad = np.argwhere((lhs != rhs).any(axis=(2, 3)))
    if len(bad):
        i, j = (int(v) for v in bad[0])
        labels = algebra.basis_labels
        raise ModuleInvalid(f"Right-module axiom fails for ({labels[i]}, {labels[j]})")
    return module


def is_hom(source: ModuleRep, target: ModuleRep, matrix: FieldArray) -> bool:
    if matrix.shape != (target.dim, source.dim):
        return False
    for a_s, a_t in zip(source.action, target.action):
        if not linalg.equal(linalg.matmul(matrix, a_s), linalg.matmul(a_t, matrix)):
            return False
    return True


def validate_hom(source: ModuleRep, target: ModuleRep, matrix) -> ModuleHom:
    """
    Validate a matrix as a module morphism source -> target.

    Raises:
        HomInvalid: If the shape is wrong or the matrix does not intertwine
    """
    if source.algebra is not target.algebra:
        raise HomInvalid("Source and target are modules over different algebras")
    if not isinstance(matrix, linalg.FieldArray):
        ints = np.asarray(matrix, dtype=np.int64).reshape(target.dim, source.dim)
        matrix = linalg.from_ints(source.field, ints)
    expected = (target.dim, source.dim)
    if matrix.shape != expected:
        raise HomInvalid(f"Hom matrix has shape {matrix.shape}, expected {expected}")
    if not is_hom(source, target, matrix):
        raise HomInvalid("Matrix does not commute with the algebra action")
    return ModuleHom(source, target, matrix)


def identity_hom(module: ModuleRep) -> ModuleHom:
    return ModuleHom(module, module, linalg.identity(module.field, module.dim))


def zero_hom(source: ModuleRep, target: ModuleRep) -> ModuleHom:
    return ModuleHom(source, target, linalg.zeros(source.field, target.dim, source.dim))


def zero_module(algebra: Algebra) -> ModuleRep:
    return _module(algebra, 0, [np.zeros((0, 0), dtype=np.int64)] * algebra.dim, "0")


def regular_module(algebra: Algebra) -> ModuleRep:
    """The algebra as a right module over itself, in its own basis."""
    action = [
        algebra.right_multiplication(algebra.basis_vector(j))
        for j in range(algebra.dim)
    ]
    return _module(algebra, algebra.dim, action, algebra.name or "A")


def free_module(algebra: Algebra, rank: int) -> ModuleRep:
    if not rank:
        return zero_module(algebra)
    return direct_sum([regular_module(algebra)] * rank).module


@dataclass(frozen=True, eq=False)
class DirectSum:
    module: ModuleRep
    inclusions: tuple[ModuleHom, ...]
    projections: tuple[ModuleHom, ...]

    def __iter__(self):
        yield self.module
        yield self.inclusions
        yield self.projections


def direct_sum(modules: Sequence[ModuleRep]) -> DirectSum:
    """
    Direct sum with its structure maps.

    Args:
        modules (Sequence[ModuleRep]): Summands over the same algebra

    Returns:
        DirectSum: (module, inclusions, projections)
    """
    if not modules:
        raise ModuleInvalid("direct_sum needs at least one summand")
    algebra = modules[0].algebra
    field = algebra.field
    total = sum(m.dim for m in modules)
    blocks = [
        linalg.block_diagonal(field, [m.action[r] for m in modules])
        for r in range(algebra.dim)
    ]
    action = tuple(b.reshape(total, total) for b in blocks)
    names = " + ".join(m.name or "M" for m in modules)
    summed = ModuleRep(algebra, total, action, names)
    inclusions, projections = [], []
    offset = 0
    for m in modules:
        inc = np.zeros((total, m.dim), dtype=np.int64)
        inc[offset : offset + m.dim, :] = np.eye(m.dim, dtype=np.int64)
        inclusions.append(ModuleHom(m, summed, field(inc)))
        projections.append(ModuleHom(summed, m, field(inc.T.copy())))
        offset += m.dim
    return DirectSum(summed, tuple(inclusions), tuple(projections))


def is_invariant(module: ModuleRep, basis: FieldArray) -> bool:
    """Whether the row span of `basis` is closed under the action."""
    for act in module.action:
        images = linalg.matmul(act, basis.T).T
        if not linalg.contains(basis, images):
            return False
    return True


def submodule(module: ModuleRep, basis, name: str = "") -> tuple[ModuleRep, ModuleHom]:
    """
    The submodule spanned by the rows of `basis`, with its inclusion.

    Args:
        module (ModuleRep): Ambient module
        basis: Row vectors spanning an invariant subspace

    Returns:
        tuple: (submodule in echelon coordinates, inclusion hom)

    Raises:
        NotSubmodule: If the span is not invariant
    """
    field = module.field
    if not isinstance(basis, linalg.FieldArray):
        basis = linalg.with_cols(np.asarray(basis, dtype=np.int64), module.dim)
        basis = linalg.from_ints(field, basis)
    echelon = linalg.row_space(basis)
    k = echelon.shape[0]
    action = []
    for act in module.action:
        images = linalg.matmul(act, echelon.T).T
        coords = linalg.coordinates(echelon, images)
        if coords is None:
            raise NotSubmodule("Subspace is not closed under the algebra action")
        action.append(coords.T.reshape(k, k))
    sub = ModuleRep(module.algebra, k, tuple(action), name)
    return sub, ModuleHom(sub, module, echelon.T.reshape(module.dim, k))


def quotient_module(
    module: ModuleRep, basis, name: str = ""
) -> tuple[ModuleRep, ModuleHom]:
    """
    The quotient by an invariant subspace, with its projection.

    The quotient is coordinatised by the echelon complement of the subspace.

    Raises:
        NotSubmodule: If the span is not invariant
    """
    field = module.field
    if not isinstance(basis, linalg.FieldArray):
        basis = linalg.with_cols(np.asarray(basis, dtype=np.int64), module.dim)
        basis = linalg.from_ints(field, basis)
    echelon = linalg.row_space(basis)
    if not is_invariant(module, echelon):
        raise NotSubmodule("Subspace is not closed under the algebra action")
    proj, sect = linalg.complement_projection(echelon, module.dim)
    q = proj.shape[0]
    action = tuple(linalg.chain(proj, act, sect).reshape(q, q) for act in module.action)
    quotient = ModuleRep(module.algebra, q, action, name)
    return quotient, ModuleHom(module, quotient, proj)


def hom_kernel(f: ModuleHom) -> tuple[ModuleRep, ModuleHom]:
    """
    Kernel of a morphism with its inclusion into the source.

    Returns:
        tuple: (K, inclusion K -> source) with f ∘ inclusion = 0
    """
    return submodule(f.source, linalg.null_space(f.matrix), "ker")


def image_basis(f: ModuleHom) -> FieldArray:
    """Echelon basis (rows) of the image of f inside the target."""
    if not f.source.dim:
        return linalg.zeros(f.field, 0, f.target.dim)
    return linalg.column_space(f.matrix)


def image(f: ModuleHom) -> tuple[ModuleRep, ModuleHom]:
    return submodule(f.target, image_basis(f), "im")


def hom_cokernel(f: ModuleHom) -> tuple[ModuleRep, ModuleHom]:
    """
    Cokernel of a morphism with its projection from the target.

    Returns:
        tuple: (Q, projection target -> Q) with projection ∘ f = 0
    """
    return quotient_module(f.target, image_basis(f), "coker")


def corestrict(f: ModuleHom, inclusion: ModuleHom) -> ModuleHom:
    """
    Factor f through a submodule inclusion.

    Raises:
        HomInvalid: If the image of f is not inside the submodule
    """
    k = inclusion.source.dim
    sub_basis = inclusion.matrix.T
    echelon = linalg.row_space(sub_basis)
    if echelon.shape[0] != k:
        raise HomInvalid("Inclusion is not injective")
    coords = linalg.coordinates(echelon, f.matrix.T)
    if coords is None:
        raise HomInvalid("Image does not lie in the given submodule")
    # sub_basis = change @ echelon
    change = linalg.coordinates(echelon, sub_basis)
    solution = linalg.matmul(coords, linalg.inverse(change)) if k else coords
    return ModuleHom(f.source, inclusion.source, solution.T.reshape(k, f.source.dim))


def factor_through_quotient(f: ModuleHom, projection: ModuleHom) -> ModuleHom:
    """
    The map g with g ∘ projection = f, for f vanishing on the kernel of projection.

    Raises:
        HomInvalid: If f does not vanish on the kernel
    """
    kernel = linalg.null_space(projection.matrix)
    if not linalg.is_zero(linalg.matmul(f.matrix, kernel.T)):
        raise HomInvalid("Map does not vanish on the kernel of the projection")
    proj, sect = linalg.complement_projection(kernel, projection.source.dim)
    # projection = T @ proj for some invertible T; g = f @ sect @ T^-1
    t = linalg.matmul(projection.matrix, sect)
    t_inv = linalg.inverse(t)
    if t_inv is None:
        raise HomInvalid("Projection is not surjective")
    return ModuleHom(projection.target, f.target, linalg.chain(f.matrix, sect, t_inv))


def hom_space(source: ModuleRep, target: ModuleRep) -> list[ModuleHom]:
    """
    Basis of Hom_A(source, target).

    Returns:
        list[ModuleHom]: Basis of the intertwiner space
    """
    field = source.field
    eye_s = linalg.identity(field, source.dim)
    eye_t = linalg.identity(field, target.dim)
    equations = [
        [(eye_t, a_s), (-a_t, eye_s)]
        for a_s, a_t in zip(source.action, target.action)
    ]
    solutions = linalg.solve_sandwich(field, (target.dim, source.dim), equations)
    return [ModuleHom(source, target, mat) for mat in solutions]


def hom_dimension(source: ModuleRep, target: ModuleRep) -> int:
    return len(hom_space(source, target))


def find_isomorphism(
    source: ModuleRep, target: ModuleRep, cap: int
) -> ModuleHom | None:
    """
    Search the hom space for an invertible intertwiner.

    Args:
        source, target (ModuleRep): Modules over the same algebra
        cap (int): Bound on the number of hom-space elements tried

    Returns:
        ModuleHom | None: An isomorphism, or None if there is none

    Raises:
        EnumerationBudgetExceeded: If the hom space has more than cap elements
            and none of the cheap candidates is invertible
    """
    if source.dim != target.dim:
        return None
    if source.dim == 0:
        return ModuleHom(source, target, linalg.zeros(source.field, 0, 0))
    if hom_dimension(source, target) != hom_dimension(target, target):
        return None
    basis = hom_space(source, target)
    for hom in basis:
        if hom.is_iso():
            return hom
    if len(basis) >= 2:
        total = basis[0]
        for hom in basis[1:]:
            total = total + hom
            if total.is_iso():
                return total
    for mat in linalg.span_elements(source.field, [h.matrix for h in basis], cap):
        if linalg.rank(mat) == source.dim:
            return ModuleHom(source, target, mat)
    return None


def annihilated_by(module: ModuleRep, vectors) -> bool:
    """Whether m * x = 0 for every module element m and listed algebra element x."""
    if not len(vectors):
        return True
    return all(linalg.is_zero(module.act(x)) for x in np.atleast_2d(vectors))


def inflate(module: ModuleRep, quotient: QuotientAlgebra) -> ModuleRep:
    """
    View an A/I-module as an A-module through A -> A/I.

    Args:
        module (ModuleRep): Module over quotient.algebra
        quotient (QuotientAlgebra): The quotient A/I

    Returns:
        ModuleRep: The same vector space with a acting as its coset
    """
    if module.algebra is not quotient.algebra:
        raise ModuleInvalid("Module is not over the given quotient algebra")
    parent = quotient.ideal.parent
    # action_A(b_r) = sum_t P[t, r] action_Y(c_t)
    acts = np.einsum("tr,tab->rab", quotient.projection, module.action_ints)
    acts = acts % parent.char
    return _module(parent, module.dim, list(acts), module.name)


def restrict(module: ModuleRep, quotient: QuotientAlgebra) -> ModuleRep:
    """
    View an A-module killed by I as an A/I-module.

    Raises:
        NotInB: If the ideal does not annihilate the module
    """
    if module.algebra is not quotient.ideal.parent:
        raise ModuleInvalid("Module is not over the parent algebra of the quotient")
    if not annihilated_by(module, quotient.ideal.vectors()):
        raise NotInB("Module is not annihilated by the ideal")
    action = [module.action[r] for r in quotient.representatives]
    return ModuleRep(quotient.algebra, module.dim, tuple(action), module.name)


def check_budget(p: int, dim: int, cap: int, what: str) -> None:
    """Raise if the number of subspaces of F_p^dim exceeds cap."""
    total = linalg.count_subspaces(p, dim, stop_above=cap)
    if total > cap:
        raise EnumerationBudgetExceeded(cap, total, what)


def push_forward(f: ModuleHom, basis: FieldArray) -> FieldArray:
    """Echelon basis of f(W) for W the row span of `basis` in the source."""
    if basis.shape[0] == 0:
        return linalg.zeros(f.field, 0, f.target.dim)
    return linalg.row_space(linalg.matmul(f.matrix, basis.T).T)


def pull_back(f: ModuleHom, basis: FieldArray) -> FieldArray:
    """Echelon basis of the preimage of the row span of `basis` in the target."""
    proj, _ = linalg.complement_projection(linalg.row_space(basis), f.target.dim)
    if proj.shape[0] == 0:
        return linalg.identity(f.field, f.source.dim)
    return linalg.row_space(linalg.null_space(linalg.matmul(proj, f.matrix)))


def annihilator_subspace(module: ModuleRep, vectors) -> FieldArray:
    """Echelon basis of {m : m * x = 0 for every listed algebra element x}."""
    vectors = np.atleast_2d(vectors)
    if not len(vectors) or vectors.shape[1] == 0:
        return linalg.identity(module.field, module.dim)
    stacked = linalg.vstack(module.field, [module.act(x) for x in vectors], module.dim)
    return linalg.row_space(linalg.null_space(stacked))


def ideal_image_subspace(module: ModuleRep, vectors) -> FieldArray:
    """Echelon basis of M * I, spanned by the columns of every action[x]."""
    vectors = np.atleast_2d(vectors)
    if not len(vectors) or vectors.shape[1] == 0 or module.dim == 0:
        return linalg.zeros(module.field, 0, module.dim)
    return linalg.subspace_sum(
        module.field, [module.act(x).T for x in vectors], module.dim
    )
