"""
Exact integer lattice arithmetic built on the Smith normal form.

Matrices are numpy arrays of Python integers (dtype=object) so nothing
overflows. sympy computes the decomposition over ZZ; every result is
re-checked here before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp


def integer_matrix(
    values, rows: int | None = None, cols: int | None = None
) -> np.ndarray:
    """An object-dtype matrix of Python ints; shape hints keep empty matrices 2-D."""
    array = np.array(values, dtype=object)
    if rows is not None and cols is not None:
        array = array.reshape(rows, cols)
    out = np.empty(array.shape, dtype=object)
    for index, x in np.ndenumerate(array):
        out[index] = int(x)
    return out


def _to_domain(matrix: np.ndarray) -> DomainMatrix:
    rows = [[ZZ(int(x)) for x in row] for row in matrix]
    return DomainMatrix(rows, matrix.shape, ZZ)


def _from_domain(matrix: DomainMatrix) -> np.ndarray:
    rows, cols = matrix.shape
    return integer_matrix(matrix.to_list(), rows, cols)


def _determinant(matrix: np.ndarray) -> int:
    if matrix.shape[0] == 0:
        return 1
    return int(_to_domain(matrix).det())


@dataclass(frozen=True, eq=False)
class SmithForm:
    """U @ matrix @ V = diagonal with U, V unimodular."""

    matrix: np.ndarray
    diagonal: np.ndarray
    left: np.ndarray
    right: np.ndarray

    @property
    def invariants(self) -> tuple[int, ...]:
        """The nonzero diagonal entries d1 | d2 | ..."""
        size = min(self.diagonal.shape)
        diag = [int(self.diagonal[i, i]) for i in range(size)]
        return tuple(d for d in diag if d != 0)

    @property
    def rank(self) -> int:
        return len(self.invariants)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariants if d != 1)

    def cokernel_rank(self) -> int:
        """Free rank of Z^cols / (row lattice of the matrix)."""
        return self.matrix.shape[1] - self.rank

    def is_valid(self) -> bool:
        rows, cols = self.matrix.shape
        if rows and cols:
            product = self.left.dot(self.matrix).dot(self.right)
            if not np.array_equal(product, self.diagonal):
                return False
        off_diagonal = self.diagonal.copy()
        for i in range(min(rows, cols)):
            off_diagonal[i, i] = 0
        if any(x != 0 for x in off_diagonal.flat):
            return False
        invs = self.invariants
        if any(invs[i + 1] % invs[i] for i in range(len(invs) - 1)):
            return False
        return abs(_determinant(self.left)) == 1 and abs(_determinant(self.right)) == 1

    def to_dict(self) -> dict:
        return {
            "shape": list(self.matrix.shape),
            "invariants": list(self.invariants),
            "rank": self.rank,
        }


def smith_normal_form(matrix) -> SmithForm:
    """
    Smith normal form with transformation certificates.

    Args:
        matrix: Integer matrix (any array-like of ints)

    Returns:
        SmithForm: Diagonal with nonnegative entries and unimodular U, V

    Raises:
        ArithmeticError: If the decomposition fails its own check
    """
    m = integer_matrix(matrix)
    rows, cols = m.shape
    if rows == 0 or cols == 0:
        return SmithForm(
            m,
            integer_matrix([], rows, cols),
            integer_matrix(np.eye(rows, dtype=np.int64).tolist(), rows, rows),
            integer_matrix(np.eye(cols, dtype=np.int64).tolist(), cols, cols),
        )
    diagonal, left, right = smith_normal_decomp(_to_domain(m))
    D, U, V = _from_domain(diagonal), _from_domain(left), _from_domain(right)
    for i in range(min(rows, cols)):
        if D[i, i] < 0:
            D[i, i] = -D[i, i]
            U[i, :] = -U[i, :]
    form = SmithForm(m, D, U, V)
    if not form.is_valid():
        raise ArithmeticError("Smith normal form failed verification")
    return form


def integer_kernel(matrix) -> np.ndarray:
    """
    Basis (as rows) of {x in Z^cols : matrix @ x = 0}.
    """
    form = smith_normal_form(matrix)
    cols = form.matrix.shape[1]
    basis = [form.right[:, j] for j in range(form.rank, cols)]
    return integer_matrix([list(b) for b in basis], len(basis), cols)


def lattice_contains(generators, vectors) -> bool:
    """
    Whether every row of `vectors` is an integer combination of the rows
    of `generators`.

    With A = generators^T and U A V = D, A a = v is solvable iff (U v)_i is
    divisible by d_i for i < rank and vanishes beyond.
    """
    vecs = integer_matrix(vectors)
    if vecs.shape[0] == 0:
        return True
    gens = integer_matrix(generators)
    if gens.shape[0] == 0:
        return all(x == 0 for x in vecs.flat)
    form = smith_normal_form(gens.T)
    invs = form.invariants
    for v in vecs:
        w = form.left.dot(integer_matrix(list(v), len(v), 1))[:, 0]
        for i, x in enumerate(w):
            if i < len(invs):
                if x % invs[i]:
                    return False
            elif x != 0:
                return False
    return True


def lattices_equal(first, second) -> bool:
    return lattice_contains(first, second) and lattice_contains(second, first)


def solve_left(coefficients, values) -> np.ndarray | None:
    """
    The unique integer X with X @ coefficients = values, if there is one.

    Requires coefficients to have full row rank; returns None when no
    integer solution exists.
    """
    C = integer_matrix(coefficients)
    W = integer_matrix(values)
    rows, cols = C.shape
    form = smith_normal_form(C)
    if form.rank != rows:
        return None
    # X U^-1 D = W V, so Y = X U^-1 has column i equal to (W V)_i / d_i
    target = W.dot(form.right)
    Y = integer_matrix([[0] * rows for _ in range(W.shape[0])], W.shape[0], rows)
    for j in range(cols):
        d = form.diagonal[j, j] if j < rows else 0
        column = target[:, j]
        if d == 0:
            if any(x != 0 for x in column):
                return None
            continue
        if any(x % d for x in column):
            return None
        Y[:, j] = [x // d for x in column]
    return Y.dot(form.left)
