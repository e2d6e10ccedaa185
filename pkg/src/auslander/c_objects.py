"""
Quadruples (X, Y, u, v) and their morphisms.

X is an A-module, Y an A/I-module, u: i(Y) -> X and v: ĵ(X) -> Y. The
two conditions are

    (i)  v ∘ ĵ(u) = 0 on ĵ(i(Y)),
    (ii) u ∘ v equals the multiplication map ĵ(X) -> X.

A morphism (f, g) satisfies f u = u' g and g v = v' ĵ(f).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.algebra_core import linalg
from src.algebra_core.algebra import SquareZeroExtension
from src.algebra_core.linalg import FieldArray
from src.algebra_core.modules import (
    ModuleHom,
    ModuleRep,
    corestrict,
    direct_sum,
    is_hom,
    restrict,
    submodule,
    zero_module,
)
from src.algebra_core.tensor import TensorProduct, tensor_over_algebra
from src.auslander.functors import inflate, multiplication_matrix
from src.pair_category.pairs import PairHom, PairObject
from src.utils.errors import (
    CHomInvalid,
    ConditionOneFails,
    ConditionTwoFails,
    HomInvalid,
    InvalidCObject,
)


@dataclass(frozen=True, eq=False)
class CObject:
    ext: SquareZeroExtension
    X: ModuleRep
    Y: ModuleRep
    u: FieldArray  # X.dim x Y.dim
    v: FieldArray  # Y.dim x dim ĵ(X)
    tensor: TensorProduct

    @property
    def dims(self) -> tuple[int, int]:
        return (self.X.dim, self.Y.dim)

    def is_zero(self) -> bool:
        return self.X.dim == 0 and self.Y.dim == 0

    def u_hom(self) -> ModuleHom:
        return ModuleHom(inflate(self.ext, self.Y), self.X, self.u)

    def __repr__(self) -> str:
        return f"CObject(dims={self.dims}, rank_u={linalg.rank(self.u)})"


@dataclass(frozen=True, eq=False)
class CHom:
    source: CObject
    target: CObject
    f: FieldArray  # on X
    g: FieldArray  # on Y

    def then(self, other: "CHom") -> "CHom":
        """The composite other ∘ self."""
        return CHom(
            self.source,
            other.target,
            linalg.matmul(other.f, self.f),
            linalg.matmul(other.g, self.g),
        )

    def is_zero(self) -> bool:
        return linalg.is_zero(self.f) and linalg.is_zero(self.g)

    def is_mono(self) -> bool:
        return (
            linalg.rank(self.f) == self.source.X.dim
            and linalg.rank(self.g) == self.source.Y.dim
        )

    def is_epi(self) -> bool:
        return (
            linalg.rank(self.f) == self.target.X.dim
            and linalg.rank(self.g) == self.target.Y.dim
        )

    def is_iso(self) -> bool:
        return self.is_mono() and self.is_epi()


def _as_b_module(ext: SquareZeroExtension, module: ModuleRep) -> ModuleRep:
    if module.algebra is ext.b_algebra:
        return module
    return restrict(module, ext.quotient)


def _field_matrix(ext: SquareZeroExtension, values, shape) -> FieldArray:
    if isinstance(values, linalg.FieldArray):
        return values.reshape(shape)
    ints = np.asarray(values, dtype=np.int64).reshape(shape)
    return linalg.from_ints(ext.field, ints)


def jtilde_matrix(
    f: FieldArray, source: TensorProduct, target: TensorProduct
) -> FieldArray:
    """Matrix of ĵ(f) for a linear map f between the underlying modules."""
    k = source.bimodule.dim
    rows, cols = target.factor.dim, source.factor.dim
    lifted = np.kron(linalg.as_ints(f).reshape(rows, cols), np.eye(k, dtype=np.int64))
    lifted = linalg.from_ints(type(f), lifted.reshape(rows * k, cols * k))
    return linalg.chain(target.projection, lifted, source.section)


def condition_residuals(
    ext: SquareZeroExtension,
    X: ModuleRep,
    Y: ModuleRep,
    u: FieldArray,
    v: FieldArray,
    tensor: TensorProduct,
) -> tuple[FieldArray, FieldArray]:
    """(v ∘ ĵ(u), u ∘ v - multiplication); both vanish for a valid quadruple."""
    inflated = inflate(ext, Y)
    tensor_y = tensor_over_algebra(inflated, ext.ideal)
    first = linalg.matmul(v, jtilde_matrix(u, tensor_y, tensor))
    second = linalg.matmul(u, v) - multiplication_matrix(tensor)
    return first, second


def make_c_object(
    ext: SquareZeroExtension, X: ModuleRep, Y: ModuleRep, u, v
) -> CObject:
    """
    Validate a quadruple (X, Y, u, v).

    Args:
        ext (SquareZeroExtension): The fixed (A, I)
        X (ModuleRep): An A-module
        Y (ModuleRep): An A/I-module (an A-module killed by I is accepted)
        u: Matrix of i(Y) -> X
        v: Matrix of ĵ(X) -> Y

    Returns:
        CObject: The validated quadruple

    Raises:
        InvalidCObject: If a component has the wrong type or shape
        HomInvalid: If u or v is not a module map
        ConditionOneFails: If v ∘ ĵ(u) != 0
        ConditionTwoFails: If u ∘ v is not the multiplication map
    """
    if X.algebra is not ext.algebra:
        raise InvalidCObject("X must be a module over A")
    Y = _as_b_module(ext, Y)
    tensor = tensor_over_algebra(X, ext.ideal)
    u = _field_matrix(ext, u, (X.dim, Y.dim))
    v = _field_matrix(ext, v, (Y.dim, tensor.module.dim))
    if not is_hom(inflate(ext, Y), X, u):
        raise HomInvalid("u is not a map of A-modules i(Y) -> X")
    if not is_hom(tensor.module, inflate(ext, Y), v):
        raise HomInvalid("v is not a map of modules ĵ(X) -> Y")
    first, second = condition_residuals(ext, X, Y, u, v, tensor)
    if not linalg.is_zero(first):
        raise ConditionOneFails(linalg.as_ints(first).tolist())
    if not linalg.is_zero(second):
        raise ConditionTwoFails(linalg.as_ints(second).tolist())
    return CObject(ext, X, Y, u, v, tensor)


def _c_object(ext: SquareZeroExtension, X: ModuleRep, Y: ModuleRep, u, v) -> CObject:
    """Assemble a quadruple known to satisfy both conditions."""
    tensor = tensor_over_algebra(X, ext.ideal)
    return CObject(
        ext,
        X,
        Y,
        _field_matrix(ext, u, (X.dim, Y.dim)),
        _field_matrix(ext, v, (Y.dim, tensor.module.dim)),
        tensor,
    )


def hom_residuals(
    source: CObject, target: CObject, f: FieldArray, g: FieldArray
) -> list[FieldArray]:
    """All equations a pair (f, g) must satisfy, as residual matrices."""
    residuals = []
    for a_s, a_t in zip(source.X.action, target.X.action):
        residuals.append(linalg.matmul(f, a_s) - linalg.matmul(a_t, f))
    for b_s, b_t in zip(source.Y.action, target.Y.action):
        residuals.append(linalg.matmul(g, b_s) - linalg.matmul(b_t, g))
    residuals.append(linalg.matmul(f, source.u) - linalg.matmul(target.u, g))
    jf = jtilde_matrix(f, source.tensor, target.tensor)
    residuals.append(linalg.matmul(g, source.v) - linalg.matmul(target.v, jf))
    return residuals


def make_c_hom(source: CObject, target: CObject, f, g) -> CHom:
    """
    Validate a morphism of quadruples.

    Raises:
        CHomInvalid: If any of the defining equations fails
    """
    f = _field_matrix(source.ext, f, (target.X.dim, source.X.dim))
    g = _field_matrix(source.ext, g, (target.Y.dim, source.Y.dim))
    if not all(linalg.is_zero(r) for r in hom_residuals(source, target, f, g)):
        raise CHomInvalid("(f, g) does not commute with the module actions, u and v")
    return CHom(source, target, f, g)


def c_identity(c: CObject) -> CHom:
    field = c.ext.field
    return CHom(c, c, linalg.identity(field, c.X.dim), linalg.identity(field, c.Y.dim))


def c_hom_space(source: CObject, target: CObject) -> list[CHom]:
    """Basis of Hom_C(source, target), solved from the quadruple equations."""
    field = source.ext.field
    shapes = [(target.X.dim, source.X.dim), (target.Y.dim, source.Y.dim)]
    solutions = linalg.solve_linear_maps(
        field, shapes, lambda pair: hom_residuals(source, target, pair[0], pair[1])
    )
    return [CHom(source, target, f, g) for f, g in solutions]


@dataclass(frozen=True, eq=False)
class CDirectSum:
    obj: CObject
    inclusions: tuple[CHom, ...]
    projections: tuple[CHom, ...]


def c_direct_sum(objects: list[CObject]) -> CDirectSum:
    """Direct sum of quadruples; v is assembled through ĵ of the projections."""
    ext = objects[0].ext
    field = ext.field
    xs = direct_sum([c.X for c in objects])
    ys = direct_sum([c.Y for c in objects])
    tensor = tensor_over_algebra(xs.module, ext.ideal)
    u = linalg.block_diagonal(field, [c.u for c in objects])
    v_rows = [
        linalg.matmul(c.v, jtilde_matrix(proj.matrix, tensor, c.tensor))
        for c, proj in zip(objects, xs.projections)
    ]
    v = linalg.vstack(field, v_rows, tensor.module.dim)
    total = CObject(
        ext, xs.module, ys.module, u.reshape(xs.module.dim, ys.module.dim), v, tensor
    )
    inclusions = tuple(
        CHom(c, total, xi.matrix, yi.matrix)
        for c, xi, yi in zip(objects, xs.inclusions, ys.inclusions)
    )
    projections = tuple(
        CHom(total, c, xp.matrix, yp.matrix)
        for c, xp, yp in zip(objects, xs.projections, ys.projections)
    )
    return CDirectSum(total, inclusions, projections)


@dataclass(frozen=True, eq=False)
class CShortExact:
    """0 -> first.source -> middle -> second.target -> 0 in C."""

    first: CHom
    second: CHom

    def is_exact(self) -> bool:
        """Exactness is checked on the X and Y components separately."""
        if not (self.first.is_mono() and self.second.is_epi()):
            return False
        if not self.first.then(self.second).is_zero():
            return False
        middle = self.first.target
        return (
            middle.X.dim == self.first.source.X.dim + self.second.target.X.dim
            and middle.Y.dim == self.first.source.Y.dim + self.second.target.Y.dim
        )


def alpha(pair: PairObject) -> CObject:
    """
    α(X, Y) = (X, Y, inclusion, v) with v(x ⊗ a) = x * a inside Y.

    Args:
        pair (PairObject): A pair

    Returns:
        CObject: The quadruple; its u is a monomorphism
    """
    ext = pair.ext
    Y_module, inclusion = submodule(pair.X, pair.Y, "Y")
    tensor = tensor_over_algebra(pair.X, ext.ideal)
    mult = ModuleHom(tensor.module, pair.X, multiplication_matrix(tensor))
    v = corestrict(mult, inclusion)
    Y = restrict(Y_module, ext.quotient)
    return CObject(ext, pair.X, Y, inclusion.matrix, v.matrix, tensor)


def alpha_hom(
    h: PairHom, source: CObject | None = None, target: CObject | None = None
) -> CHom:
    source = source or alpha(h.source)
    target = target or alpha(h.target)
    restricted = corestrict(source.u_hom().then(h.f), target.u_hom())
    return CHom(source, target, h.f.matrix, restricted.matrix)


def beta(ext: SquareZeroExtension, module: ModuleRep) -> CObject:
    """β(Y) = (0, Y, 0, 0)."""
    Y = _as_b_module(ext, module)
    zero = zero_module(ext.algebra)
    field = ext.field
    u, v = linalg.zeros(field, 0, Y.dim), linalg.zeros(field, Y.dim, 0)
    return _c_object(ext, zero, Y, u, v)


def beta_hom(
    ext: SquareZeroExtension,
    g: ModuleHom,
    source: CObject | None = None,
    target: CObject | None = None,
) -> CHom:
    source = source or beta(ext, g.source)
    target = target or beta(ext, g.target)
    return CHom(source, target, linalg.zeros(ext.field, 0, 0), g.matrix)


def beta_right_adjoint(c: CObject) -> tuple[ModuleRep, CHom]:
    """
    β^R(c) = ker u with the counit β(ker u) -> c.

    Returns:
        tuple: (ker u as an A/I-module, monomorphism β(ker u) -> c)
    """
    kernel, inclusion = submodule(c.Y, linalg.null_space(c.u), "ker u")
    torsion = beta(c.ext, kernel)
    counit = CHom(torsion, c, linalg.zeros(c.ext.field, c.X.dim, 0), inclusion.matrix)
    return kernel, counit


def forget_to_a(c: CObject) -> ModuleRep:
    return c.X


def forget_to_b(c: CObject) -> ModuleRep:
    return c.Y


def forget_hom_to_a(h: CHom) -> ModuleHom:
    return ModuleHom(h.source.X, h.target.X, h.f)


def forget_hom_to_b(h: CHom) -> ModuleHom:
    return ModuleHom(h.source.Y, h.target.Y, h.g)


def serre_project(c: CObject) -> ModuleRep:
    """π(X, Y, u, v) = X."""
    return c.X


def serre_project_hom(h: CHom) -> ModuleHom:
    return forget_hom_to_a(h)


def is_in_alpha_image(c: CObject) -> bool:
    """The essential image of α consists of the quadruples with u mono."""
    return linalg.rank(c.u) == c.Y.dim


def is_in_beta_image(c: CObject) -> bool:
    return c.X.dim == 0
