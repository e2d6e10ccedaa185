"""
Finite-dimensional associative unital algebras over prime fields.

An algebra is given by structure constants c[i, j, k], the coefficient of
b_k in the product b_i * b_j. Multiplication is checked for associativity
and for the unit on every basis triple.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Sequence

import galois
import numpy as np

from src.algebra_core import linalg
from src.algebra_core.linalg import FieldArray
from src.utils.errors import (
    AlgebraInvalid,
    IdealInvalid,
    IdealNotSquareZero,
    NoUnit,
    NotAssociative,
    NotPrimeCharacteristic,
    NotTwoSided,
)


@dataclass(frozen=True, eq=False)
class Algebra:
    """A validated algebra. Build it with validate_algebra()."""

    char: int
    basis_labels: tuple[str, ...]
    structure_constants: np.ndarray  # int array, shape (n, n, n)
    unit: np.ndarray  # int array, shape (n,)
    name: str = ""

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    @property
    def field(self) -> type[FieldArray]:
        return linalg.prime_field(self.char)

    def multiply(self, x, y) -> np.ndarray:
        """Product of two coefficient vectors."""
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        return np.einsum("i,j,ijk->k", x, y, self.structure_constants) % self.char

    def basis_vector(self, index: int) -> np.ndarray:
        vec = np.zeros(self.dim, dtype=np.int64)
        vec[index] = 1
        return vec

    def right_multiplication(self, y) -> np.ndarray:
        """Matrix R with R @ x = x * y."""
        y = np.asarray(y, dtype=np.int64)
        return np.einsum("ijk,j->ki", self.structure_constants, y) % self.char

    def format_element(self, vec) -> str:
        terms = []
        for coeff, label in zip(np.asarray(vec) % self.char, self.basis_labels):
            if coeff == 1:
                terms.append(label)
            elif coeff:
                terms.append(f"{coeff}{label}")
        return " + ".join(terms) or "0"


def validate_algebra(
    char: int,
    basis_labels: Sequence[str],
    structure_constants,
    unit,
    name: str = "",
) -> Algebra:
    """
    Validate a structure-constant table.

    Args:
        char (int): Characteristic p, must be prime
        basis_labels (Sequence[str]): Names of the n basis elements
        structure_constants: Array-like of shape (n, n, n)
        unit: Coefficient vector of length n

    Returns:
        Algebra: The validated algebra

    Raises:
        NotPrimeCharacteristic: If p is not prime
        AlgebraInvalid: If the table has inconsistent dimensions
        NotAssociative: On the first failing basis triple
        NoUnit: If unit is not a two-sided identity
    """
    is_int = isinstance(char, (int, np.integer))
    if not is_int or char < 2 or not galois.is_prime(int(char)):
        raise NotPrimeCharacteristic(char)
    char = int(char)
    labels = tuple(str(label) for label in basis_labels)
    n = len(labels)
    if len(set(labels)) != n:
        raise AlgebraInvalid("Basis labels must be distinct")

    consts = np.asarray(structure_constants, dtype=np.int64)
    if consts.shape != (n, n, n):
        raise AlgebraInvalid(
            f"Structure constants must have shape {(n, n, n)}, got {consts.shape}"
        )
    consts = consts % char
    unit_vec = np.asarray(unit, dtype=np.int64)
    if unit_vec.shape != (n,):
        raise AlgebraInvalid(f"Unit must have length {n}, got shape {unit_vec.shape}")
    unit_vec = unit_vec % char

    # (b_i b_j) b_k and b_i (b_j b_k), indexed [i, j, k, m]
    left = np.einsum("ijl,lkm->ijkm", consts, consts) % char
    right = np.einsum("jkl,ilm->ijkm", consts, consts) % char
    bad = np.argwhere((left != right).any(axis=3))
    if len(bad):
        i, j, k = (int(v) for v in bad[0])
        raise NotAssociative(i, j, k, labels)

    eye = np.eye(n, dtype=np.int64)
    left_unit = np.einsum("r,rjk->jk", unit_vec, consts) % char
    right_unit = np.einsum("r,jrk->jk", unit_vec, consts) % char
    if n and not np.array_equal(left_unit, eye):
        raise NoUnit("unit * b is not b for some basis element b")
    if n and not np.array_equal(right_unit, eye):
        raise NoUnit("b * unit is not b for some basis element b")
    if n == 0:
        raise NoUnit("the zero algebra has no unit distinct from zero")

    return Algebra(char, labels, consts, unit_vec, name)


def algebra_from_quadruples(
    char: int,
    basis_labels: Sequence[str],
    products: Sequence[Sequence[int]],
    unit,
    name: str = "",
) -> Algebra:
    """Validate an algebra given sparsely as (i, j, k, coefficient) quadruples."""
    n = len(basis_labels)
    consts = np.zeros((n, n, n), dtype=np.int64)
    for entry in products:
        if len(entry) != 4:
            raise AlgebraInvalid(
                f"Product entry {list(entry)} is not an (i, j, k, c) quadruple"
            )
        i, j, k, c = (int(v) for v in entry)
        if not all(0 <= x < n for x in (i, j, k)):
            raise AlgebraInvalid(
                f"Product entry {list(entry)} refers to a missing basis index"
            )
        consts[i, j, k] += c
    return validate_algebra(char, basis_labels, consts, unit, name)


@dataclass(frozen=True, eq=False)
class Ideal:
    """A two-sided ideal, stored by its echelon basis in algebra coordinates."""

    parent: Algebra
    basis: FieldArray  # k x n
    square_zero: bool

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def vectors(self) -> np.ndarray:
        return linalg.as_ints(self.basis)

    def coordinates(self, elements) -> np.ndarray:
        """Coordinates of algebra elements (rows) that lie in the ideal."""
        field = self.parent.field
        rows = np.atleast_2d(elements).reshape(-1, self.parent.dim)
        rows = linalg.from_ints(field, rows)
        coords = linalg.coordinates(self.basis, rows)
        if coords is None:
            raise IdealInvalid("Element does not lie in the ideal")
        return linalg.as_ints(coords)

    def _restricted(self, images: np.ndarray) -> np.ndarray:
        if not self.dim:
            return np.zeros((0, 0), dtype=np.int64)
        return self.coordinates(images).T

    @functools.cached_property
    def left_actions(self) -> tuple[np.ndarray, ...]:
        """For each algebra basis element b_r, the k x k matrix of x -> b_r * x on I."""
        out = []
        vecs = self.vectors()
        for r in range(self.parent.dim):
            b = self.parent.basis_vector(r)
            images = np.array([self.parent.multiply(b, v) for v in vecs])
            out.append(self._restricted(images))
        return tuple(out)

    @functools.cached_property
    def right_actions(self) -> tuple[np.ndarray, ...]:
        """For each algebra basis element b_r, the k x k matrix of x -> x * b_r on I."""
        out = []
        vecs = self.vectors()
        for r in range(self.parent.dim):
            b = self.parent.basis_vector(r)
            images = np.array([self.parent.multiply(v, b) for v in vecs])
            out.append(self._restricted(images))
        return tuple(out)


def validate_ideal(
    algebra: Algebra, vectors, require_square_zero: bool = True
) -> Ideal:
    """
    Validate an ideal given by spanning coefficient vectors.

    Args:
        algebra (Algebra): The parent algebra
        vectors: Linearly independent coefficient vectors
        require_square_zero (bool): Reject ideals with I * I != 0

    Returns:
        Ideal: The validated ideal with its square_zero flag set

    Raises:
        IdealInvalid: If the vectors are dependent or malformed
        NotTwoSided: If the span is not closed under multiplication
        IdealNotSquareZero: If require_square_zero and I * I != 0
    """
    n = algebra.dim
    field = algebra.field
    raw = linalg.with_cols(np.asarray(vectors, dtype=np.int64), n)
    given = linalg.from_ints(field, raw)
    basis = linalg.row_space(given)
    if basis.shape[0] != raw.shape[0]:
        raise IdealInvalid("Ideal basis vectors are linearly dependent")

    for s, vec in enumerate(raw):
        for r in range(n):
            b = algebra.basis_vector(r)
            left = linalg.from_ints(field, [algebra.multiply(b, vec)])
            if not linalg.contains(basis, left):
                raise NotTwoSided("left", r, s)
            right = linalg.from_ints(field, [algebra.multiply(vec, b)])
            if not linalg.contains(basis, right):
                raise NotTwoSided("right", r, s)

    square_zero = True
    for s, x in enumerate(raw):
        for t, y in enumerate(raw):
            if algebra.multiply(x, y).any():
                if require_square_zero:
                    raise IdealNotSquareZero(s, t)
                square_zero = False
    return Ideal(algebra, basis, square_zero)


@dataclass(frozen=True, eq=False)
class QuotientAlgebra:
    """
    A/I with coset representatives taken from the echelon complement of I.

    `representatives[t]` is the algebra basis index whose coset is the
    t-th basis element of A/I. `projection` maps A-coordinates to
    A/I-coordinates.
    """

    algebra: Algebra
    ideal: Ideal
    representatives: tuple[int, ...]
    projection: np.ndarray  # m x n


def quotient_algebra(ideal: Ideal) -> QuotientAlgebra:
    """
    Build A/I.

    Args:
        ideal (Ideal): A validated two-sided ideal

    Returns:
        QuotientAlgebra: The quotient with its coset representatives
    """
    parent = ideal.parent
    proj, _ = linalg.complement_projection(ideal.basis, parent.dim)
    proj = linalg.as_ints(proj)
    _, pivots = linalg.row_reduce(ideal.basis)
    reps = tuple(c for c in range(parent.dim) if c not in pivots)
    m = len(reps)
    consts = np.zeros((m, m, m), dtype=np.int64)
    for t, r in enumerate(reps):
        for u, s in enumerate(reps):
            prod = parent.multiply(parent.basis_vector(r), parent.basis_vector(s))
            consts[t, u] = proj @ prod % parent.char
    unit = proj @ parent.unit % parent.char
    labels = [f"{parent.basis_labels[r]}+I" for r in reps]
    name = f"{parent.name}/I" if parent.name else ""
    quotient = validate_algebra(parent.char, labels, consts, unit, name)
    return QuotientAlgebra(quotient, ideal, reps, proj)


@dataclass(frozen=True, eq=False)
class SquareZeroExtension:
    """
    The data (A, I, A/I) every construction works over.

    B is the category of right A/I-modules, viewed inside right A-modules.
    """

    algebra: Algebra
    ideal: Ideal
    quotient: QuotientAlgebra

    @property
    def field(self) -> type[FieldArray]:
        return self.algebra.field

    @property
    def b_algebra(self) -> Algebra:
        return self.quotient.algebra

    @property
    def name(self) -> str:
        return self.algebra.name


def square_zero_extension(algebra: Algebra, ideal_vectors) -> SquareZeroExtension:
    """
    Validate a square-zero ideal and build the quotient.

    Raises:
        IdealInvalid: If the ideal is not a square-zero two-sided ideal
    """
    ideal = validate_ideal(algebra, ideal_vectors, require_square_zero=True)
    return SquareZeroExtension(algebra, ideal, quotient_algebra(ideal))
