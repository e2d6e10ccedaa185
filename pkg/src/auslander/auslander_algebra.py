"""
The block matrix algebra D = [[A, I], [A/I, A/I]].

Basis order: E11(b_r) for the basis of A, E12(i_s) for the basis of I,
E21(c_t) and E22(c_t) for the basis of A/I. Products follow matrix
multiplication; the (1,2)(2,1) entry I * A/I lands in I ⊆ A and is well
defined because I * I = 0, while (2,1)(1,2) vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.algebra_core.algebra import Algebra, SquareZeroExtension, validate_algebra
from src.utils.errors import IdealNotSquareZero


@dataclass(frozen=True, eq=False)
class AuslanderAlgebra:
    """D together with the block layout of its basis."""

    ext: SquareZeroExtension
    algebra: Algebra

    @property
    def n(self) -> int:
        return self.ext.algebra.dim

    @property
    def k(self) -> int:
        return self.ext.ideal.dim

    @property
    def m(self) -> int:
        return self.ext.b_algebra.dim

    @property
    def offsets(self) -> dict[str, int]:
        n, k, m = self.n, self.k, self.m
        return {"11": 0, "12": n, "21": n + k, "22": n + k + m}

    def block_of(self, index: int) -> str:
        """Which block ("11", "12", "21" or "22") a basis index belongs to."""
        for block in ("22", "21", "12", "11"):
            if index >= self.offsets[block]:
                return block
        raise IndexError(index)

    def embed(self, block: str, coords) -> np.ndarray:
        """D-coordinates of an element given by its coordinates inside one block."""
        vec = np.zeros(self.algebra.dim, dtype=np.int64)
        coords = np.asarray(coords, dtype=np.int64)
        start = self.offsets[block]
        vec[start : start + len(coords)] = coords
        return vec % self.algebra.char

    @property
    def e1(self) -> np.ndarray:
        return self.embed("11", self.ext.algebra.unit)

    @property
    def e2(self) -> np.ndarray:
        return self.embed("22", self.ext.b_algebra.unit)


def build_auslander_algebra(ext: SquareZeroExtension) -> AuslanderAlgebra:
    """
    Build and validate D for a square-zero extension.

    Args:
        ext (SquareZeroExtension): Validated (A, I, A/I)

    Returns:
        AuslanderAlgebra: D with dim D = dim A + dim I + 2 dim A/I

    Raises:
        IdealNotSquareZero: If the ideal was validated without the I * I = 0 check
    """
    if not ext.ideal.square_zero:
        raise IdealNotSquareZero(0, 0)
    A, ideal, B = ext.algebra, ext.ideal, ext.b_algebra
    quotient = ext.quotient
    n, k, m = A.dim, ideal.dim, B.dim
    o12, o21, o22 = n, n + k, n + k + m
    size = n + k + 2 * m
    consts = np.zeros((size, size, size), dtype=np.int64)
    ideal_vecs = ideal.vectors()
    reps = [A.basis_vector(r) for r in quotient.representatives]
    proj = quotient.projection

    def ideal_coords(vec) -> np.ndarray:
        return ideal.coordinates(vec)[0] if k else np.zeros(0, dtype=np.int64)

    for r in range(n):
        b_r = A.basis_vector(r)
        for r2 in range(n):
            consts[r, r2, :n] = A.multiply(b_r, A.basis_vector(r2))
        for s in range(k):
            prod = A.multiply(b_r, ideal_vecs[s])
            consts[r, o12 + s, o12 : o12 + k] = ideal_coords(prod)
    for s in range(k):
        for t in range(m):
            prod = A.multiply(ideal_vecs[s], reps[t])
            consts[o12 + s, o21 + t, :n] = prod
            consts[o12 + s, o22 + t, o12 : o12 + k] = ideal_coords(prod)
    for t in range(m):
        for r in range(n):
            prod = A.multiply(reps[t], A.basis_vector(r))
            consts[o21 + t, r, o21 : o21 + m] = proj @ prod % A.char
        for t2 in range(m):
            product = B.structure_constants[t, t2]
            consts[o22 + t, o21 + t2, o21 : o21 + m] = product
            consts[o22 + t, o22 + t2, o22 : o22 + m] = product

    unit = np.zeros(size, dtype=np.int64)
    unit[:n] = A.unit
    unit[o22:] = B.unit
    labels = (
        [f"e11[{label}]" for label in A.basis_labels]
        + [f"e12[{A.format_element(v)}]" for v in ideal_vecs]
        + [f"e21[{label}]" for label in B.basis_labels]
        + [f"e22[{label}]" for label in B.basis_labels]
    )
    name = f"D({A.name})" if A.name else "D"
    D = validate_algebra(A.char, labels, consts, unit, name)
    return AuslanderAlgebra(ext, D)


def corner_algebras(aus: AuslanderAlgebra) -> tuple[Algebra, Algebra]:
    """
    The corners e1 D e1 and e2 D e2 read off the block layout.

    Returns:
        tuple: (e1 D e1, e2 D e2), validated; they coincide with A and A/I
    """
    consts = aus.algebra.structure_constants
    n, o22 = aus.n, aus.offsets["22"]
    A, B = aus.ext.algebra, aus.ext.b_algebra
    top = consts[:n, :n, :n]
    bottom = consts[o22:, o22:, o22:]
    first = validate_algebra(A.char, A.basis_labels, top, A.unit, "e1De1")
    second = validate_algebra(B.char, B.basis_labels, bottom, B.unit, "e2De2")
    return first, second
