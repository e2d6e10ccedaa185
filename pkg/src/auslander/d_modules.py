"""
Quadruples as modules over D and back.

A quadruple (X, Y, u, v) becomes the D-module X ⊕ Y: E11(a) acts on X,
E22(c) acts on Y, E12(i) sends x to v(x ⊗ i) in Y and E21(c) sends y to
u(y * c) in X. The two quadruple conditions are exactly the module axioms
for the off-diagonal blocks.
"""

from __future__ import annotations

import numpy as np

from src.algebra_core import linalg
from src.algebra_core.modules import ModuleHom, ModuleRep, validate_module
from src.algebra_core.tensor import tensor_over_algebra
from src.auslander.auslander_algebra import AuslanderAlgebra
from src.auslander.c_objects import CHom, CObject, make_c_object
from src.utils.errors import HomInvalid, InvalidCObject, ModuleInvalid


def _embedding(d: int, k: int, s: int) -> np.ndarray:
    """e_p -> e_p ⊗ i_s inside M ⊗_F I."""
    emb = np.zeros((d * k, d), dtype=np.int64)
    for p in range(d):
        emb[p * k + s, p] = 1
    return emb


def to_d_module(aus: AuslanderAlgebra, c: CObject) -> ModuleRep:
    """
    Pack a quadruple into a D-module of dimension dim X + dim Y.

    Raises:
        InvalidCObject: If the packed matrices fail the module axioms
    """
    ext = aus.ext
    p = ext.algebra.char
    dX, dY = c.X.dim, c.Y.dim
    N = dX + dY
    k = ext.ideal.dim
    u = linalg.as_ints(c.u).reshape(dX, dY)
    v = linalg.with_rows(linalg.as_ints(c.v), dY)
    tensor_proj = linalg.with_cols(linalg.as_ints(c.tensor.projection), dX * k)
    actions = []
    for r in range(aus.n):
        mat = np.zeros((N, N), dtype=np.int64)
        mat[:dX, :dX] = c.X.action_ints[r]
        actions.append(mat)
    for s in range(aus.k):
        mat = np.zeros((N, N), dtype=np.int64)
        mat[dX:, :dX] = v @ tensor_proj @ _embedding(dX, k, s)
        actions.append(mat % p)
    for t in range(aus.m):
        mat = np.zeros((N, N), dtype=np.int64)
        mat[:dX, dX:] = u @ c.Y.action_ints[t]
        actions.append(mat % p)
    for t in range(aus.m):
        mat = np.zeros((N, N), dtype=np.int64)
        mat[dX:, dX:] = c.Y.action_ints[t]
        actions.append(mat)
    try:
        return validate_module(aus.algebra, actions, "D-module")
    except ModuleInvalid as exc:
        raise InvalidCObject(f"Quadruple does not pack into a D-module: {exc}") from exc


def from_d_module(aus: AuslanderAlgebra, module: ModuleRep) -> CObject:
    """
    Unpack a D-module into a quadruple.

    X is the image of e1 and Y the image of e2; the module is first
    rewritten in a basis adapted to this splitting.

    Raises:
        InvalidCObject: If the module is not over D or does not decode
    """
    if module.algebra is not aus.algebra:
        raise InvalidCObject("Module is not over the algebra D")
    ext = aus.ext
    field = ext.field
    N = module.dim
    first = linalg.column_space(module.act(aus.e1))
    second = linalg.column_space(module.act(aus.e2))
    dX, dY = first.shape[0], second.shape[0]
    change = linalg.vstack(field, [first, second], N).T.reshape(N, N)
    change_inv = linalg.inverse(change)
    if change_inv is None:
        raise InvalidCObject("e1 and e2 do not split the module")

    def block_action(element) -> np.ndarray:
        return linalg.as_ints(linalg.chain(change_inv, module.act(element), change))

    X_action = [
        block_action(aus.embed("11", ext.algebra.basis_vector(r)))[:dX, :dX]
        for r in range(aus.n)
    ]
    Y_action = [
        block_action(aus.embed("22", ext.b_algebra.basis_vector(t)))[dX:, dX:]
        for t in range(aus.m)
    ]
    u = block_action(aus.embed("21", ext.b_algebra.unit))[:dX, dX:]
    k = aus.k
    v_raw = np.zeros((dY, dX * k), dtype=np.int64)
    for s in range(k):
        block = block_action(aus.embed("12", np.eye(k, dtype=np.int64)[s]))[dX:, :dX]
        for p in range(dX):
            v_raw[:, p * k + s] = block[:, p]
    try:
        X = validate_module(ext.algebra, [a.reshape(dX, dX) for a in X_action], "X")
        Y = validate_module(ext.b_algebra, [a.reshape(dY, dY) for a in Y_action], "Y")
        tensor = tensor_over_algebra(X, ext.ideal)
        v = linalg.matmul(linalg.from_ints(field, v_raw), tensor.section)
        return make_c_object(ext, X, Y, u, v)
    except (ModuleInvalid, HomInvalid) as exc:
        raise InvalidCObject(f"D-module does not decode to a quadruple: {exc}") from exc


def c_hom_to_d(h: CHom, source: ModuleRep, target: ModuleRep) -> ModuleHom:
    """The block diagonal map f ⊕ g between packed D-modules."""
    matrix = linalg.block_diagonal(h.source.ext.field, [h.f, h.g])
    return ModuleHom(source, target, matrix.reshape(target.dim, source.dim))


def same_c_object(first: CObject, second: CObject) -> bool:
    """Equal as matrices in every component."""
    return (
        first.X.same_as(second.X)
        and first.Y.same_as(second.Y)
        and linalg.equal(first.u, second.u)
        and linalg.equal(first.v, second.v)
    )


def c_object_d_module_roundtrip(
    aus: AuslanderAlgebra, c: CObject
) -> tuple[ModuleRep, CObject]:
    """
    Pack into a D-module and unpack again.

    Returns:
        tuple: (the D-module, the decoded quadruple)
    """
    module = to_d_module(aus, c)
    return module, from_d_module(aus, module)
