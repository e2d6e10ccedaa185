"""
Exact linear algebra over prime fields.

Matrices are galois FieldArrays. Subspaces are stored as reduced row
echelon bases (one basis vector per row, zero rows dropped), which makes
"same subspace" decidable by array equality. All helpers accept matrices
with a zero dimension.
"""

from __future__ import annotations

import functools
import itertools
from collections.abc import Callable, Iterator, Sequence

import galois
import numpy as np

from src.utils.errors import EnumerationBudgetExceeded

FieldArray = galois.FieldArray


@functools.lru_cache(maxsize=None)
def prime_field(p: int) -> type[FieldArray]:
    """The field F_p as a galois array class."""
    return galois.GF(p)


def as_ints(mat: FieldArray) -> np.ndarray:
    """Plain integer copy of a field array."""
    return np.asarray(mat.view(np.ndarray), dtype=np.int64)


def from_ints(field: type[FieldArray], values) -> FieldArray:
    """Field array from integers, reduced modulo the characteristic."""
    arr = np.asarray(values, dtype=np.int64) % field.characteristic
    return field(arr)


def zeros(field: type[FieldArray], rows: int, cols: int) -> FieldArray:
    return field.Zeros((rows, cols))


def identity(field: type[FieldArray], n: int) -> FieldArray:
    if n == 0:
        return field.Zeros((0, 0))
    return field.Identity(n)


def matmul(a: FieldArray, b: FieldArray) -> FieldArray:
    """Matrix product that tolerates empty factors."""
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"Shape mismatch {a.shape} @ {b.shape}")
    if 0 in (a.shape[0], a.shape[1], b.shape[1]):
        return type(a).Zeros((a.shape[0], b.shape[1]))
    return a @ b


def with_cols(values: np.ndarray, cols: int) -> np.ndarray:
    """Reshape to `cols` columns; empty input has no rows."""
    if values.ndim == 2 and values.shape[1] == cols:
        return values
    if values.size == 0:
        return values.reshape(0, cols)
    return values.reshape(-1, cols)


def with_rows(values: np.ndarray, rows: int) -> np.ndarray:
    """Reshape to `rows` rows; empty input becomes rows x 0."""
    if values.ndim == 2 and values.shape[0] == rows:
        return values
    if values.size == 0:
        return values.reshape(rows, 0)
    return values.reshape(rows, -1)


def chain(*factors: FieldArray) -> FieldArray:
    """Product of several matrices, left to right."""
    return functools.reduce(matmul, factors)


def vstack(
    field: type[FieldArray], blocks: Sequence[FieldArray], cols: int
) -> FieldArray:
    """Stack row blocks; every block must have `cols` columns."""
    parts = [with_cols(as_ints(b), cols) for b in blocks]
    if not parts:
        return field.Zeros((0, cols))
    return field(np.vstack(parts))


def hstack(
    field: type[FieldArray], blocks: Sequence[FieldArray], rows: int
) -> FieldArray:
    """Concatenate column blocks; every block must have `rows` rows."""
    parts = [with_rows(as_ints(b), rows) for b in blocks]
    if not parts:
        return field.Zeros((rows, 0))
    return field(np.hstack(parts))


def block_diagonal(field: type[FieldArray], blocks: Sequence[FieldArray]) -> FieldArray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = np.zeros((rows, cols), dtype=np.int64)
    r = c = 0
    for b in blocks:
        out[r : r + b.shape[0], c : c + b.shape[1]] = as_ints(b)
        r += b.shape[0]
        c += b.shape[1]
    return field(out)


def is_zero(mat: FieldArray) -> bool:
    return not np.any(as_ints(mat))


def equal(a: FieldArray, b: FieldArray) -> bool:
    return a.shape == b.shape and np.array_equal(as_ints(a), as_ints(b))


def row_reduce(mat: FieldArray) -> tuple[FieldArray, tuple[int, ...]]:
    """
    Reduced row echelon form with the zero rows dropped.

    Args:
        mat (FieldArray): Any matrix

    Returns:
        tuple: (echelon rows, pivot column of each row)
    """
    field = type(mat)
    rows, cols = mat.shape
    if rows == 0 or cols == 0:
        return field.Zeros((0, cols)), ()
    reduced = as_ints(mat.row_reduce())
    keep = [i for i in range(rows) if reduced[i].any()]
    reduced = reduced[keep]
    pivots = tuple(int(np.flatnonzero(row)[0]) for row in reduced)
    return field(reduced.reshape(len(keep), cols)), pivots


def row_space(mat: FieldArray) -> FieldArray:
    """Canonical echelon basis of the span of the rows."""
    return row_reduce(mat)[0]


def column_space(mat: FieldArray) -> FieldArray:
    """Canonical echelon basis (as rows) of the span of the columns."""
    return row_space(mat.T)


def rank(mat: FieldArray) -> int:
    if 0 in mat.shape:
        return 0
    return int(np.linalg.matrix_rank(mat))


def null_space(mat: FieldArray) -> FieldArray:
    """
    Basis of {x : mat @ x = 0}, one vector per row.

    Args:
        mat (FieldArray): An r x c matrix

    Returns:
        FieldArray: A k x c matrix whose rows span the null space
    """
    field = type(mat)
    rows, cols = mat.shape
    if rows == 0:
        return identity(field, cols)
    if cols == 0 or rank(mat) == cols:
        return field.Zeros((0, cols))
    return field(as_ints(mat.null_space()).reshape(-1, cols))


def coordinates(basis: FieldArray, vectors: FieldArray) -> FieldArray | None:
    """
    Coordinates of row vectors in an echelon basis.

    Args:
        basis (FieldArray): Echelon basis rows (as produced by row_space)
        vectors (FieldArray): Rows to express

    Returns:
        FieldArray | None: Coefficient rows C with vectors = C @ basis, or
        None if some vector is outside the span
    """
    field = type(basis)
    _, pivots = row_reduce(basis)
    if len(pivots) != basis.shape[0]:
        raise ValueError("coordinates() needs a basis without dependent rows")
    picked = as_ints(vectors)[:, list(pivots)]
    coeffs = field(picked.reshape(vectors.shape[0], len(pivots)))
    if not equal(matmul(coeffs, basis), vectors):
        return None
    return coeffs


def contains(basis: FieldArray, vectors: FieldArray) -> bool:
    """Whether every row of `vectors` lies in the span of `basis`."""
    if vectors.shape[0] == 0:
        return True
    if basis.shape[0] == 0:
        return is_zero(vectors)
    return rank(vstack(type(basis), [basis, vectors], basis.shape[1])) == rank(basis)


def subspace_sum(
    field: type[FieldArray], bases: Sequence[FieldArray], dim: int
) -> FieldArray:
    return row_space(vstack(field, bases, dim))


def intersection(u: FieldArray, w: FieldArray) -> FieldArray:
    """Echelon basis of the intersection of two row spans."""
    field = type(u)
    dim = u.shape[1]
    if u.shape[0] == 0 or w.shape[0] == 0:
        return field.Zeros((0, dim))
    # a @ u = b @ w  <=>  [a, b] annihilates [u; -w]
    stacked = vstack(field, [u, -w], dim)
    relations = null_space(stacked.T)
    return row_space(matmul(relations[:, : u.shape[0]], u))


def complement_projection(
    basis: FieldArray, dim: int
) -> tuple[FieldArray, FieldArray]:
    """
    Projection onto F^dim / span(basis) using the echelon complement.

    The quotient is coordinatised by the non-pivot standard vectors.

    Args:
        basis (FieldArray): Echelon basis of the subspace
        dim (int): Ambient dimension

    Returns:
        tuple: (P, S) with P of shape q x dim killing the subspace and S of
        shape dim x q a section, P @ S = identity
    """
    field = type(basis)
    p = field.characteristic
    reduced, pivots = row_reduce(basis)
    red = as_ints(reduced)
    free = [c for c in range(dim) if c not in pivots]
    proj = np.zeros((len(free), dim), dtype=np.int64)
    sect = np.zeros((dim, len(free)), dtype=np.int64)
    for n, f in enumerate(free):
        proj[n, f] = 1
        sect[f, n] = 1
    for i, pc in enumerate(pivots):
        for n, f in enumerate(free):
            proj[n, pc] = (-red[i, f]) % p
    return field(proj), field(sect)


def inverse(mat: FieldArray) -> FieldArray | None:
    """Inverse of a square matrix, or None when it is singular."""
    field = type(mat)
    n = mat.shape[0]
    if mat.shape != (n, n):
        raise ValueError(f"Square matrix expected, got {mat.shape}")
    if n == 0:
        return field.Zeros((0, 0))
    if rank(mat) < n:
        return None
    return np.linalg.inv(mat)


def subspace_key(basis: FieldArray) -> tuple:
    """Hashable key of an echelon basis."""
    return (basis.shape, as_ints(basis).tobytes())


def normalized_vectors(field: type[FieldArray], dim: int) -> Iterator[FieldArray]:
    """Every nonzero vector of F^dim whose first nonzero entry is 1."""
    p = field.characteristic
    for lead in range(dim):
        for tail in itertools.product(range(p), repeat=dim - lead - 1):
            vec = np.zeros(dim, dtype=np.int64)
            vec[lead] = 1
            vec[lead + 1 :] = tail
            yield field(vec)


def count_normalized_vectors(p: int, dim: int) -> int:
    return (p**dim - 1) // (p - 1)


def count_subspaces(p: int, dim: int, stop_above: int | None = None) -> int:
    """
    Number of subspaces of F_p^dim (sum of Gaussian binomials).

    Counting stops early once the total exceeds `stop_above`.
    """
    total = 0
    for k in range(dim + 1):
        num = den = 1
        for i in range(k):
            num *= p ** (dim - i) - 1
            den *= p ** (i + 1) - 1
        total += num // den
        if stop_above is not None and total > stop_above:
            return total
    return total


def span_elements(
    field: type[FieldArray], basis: Sequence[FieldArray], cap: int
) -> Iterator[FieldArray]:
    """
    Every linear combination of the given matrices.

    Raises:
        EnumerationBudgetExceeded: If p^len(basis) exceeds cap
    """
    p = field.characteristic
    size = p ** len(basis)
    if size > cap:
        raise EnumerationBudgetExceeded(cap, size, "linear span enumeration")
    if not basis:
        return
    shape = basis[0].shape
    ints = [as_ints(b) for b in basis]
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        total = np.zeros(shape, dtype=np.int64)
        for c, b in zip(coeffs, ints):
            if c:
                total += c * b
        yield from_ints(field, total)


def solve_linear_maps(
    field: type[FieldArray],
    shapes: Sequence[tuple[int, int]],
    constraints: Callable[[tuple[FieldArray, ...]], Sequence[FieldArray]],
) -> list[tuple[FieldArray, ...]]:
    """
    Basis of all tuples of matrices satisfying linear constraints.

    The constraint function must be linear in its argument; it is
    evaluated on every unit matrix tuple to assemble the linear system.

    Args:
        field: The prime field
        shapes: Shape of each unknown matrix
        constraints: Maps a tuple of matrices to residual matrices that
            must all vanish

    Returns:
        list: Basis of the solution space, each element a tuple of matrices
    """
    sizes = [r * c for r, c in shapes]
    total = sum(sizes)
    if total == 0:
        return []

    def unflatten(vec: np.ndarray) -> tuple[FieldArray, ...]:
        out, start = [], 0
        for (r, c), size in zip(shapes, sizes):
            out.append(field(vec[start : start + size].reshape(r, c)))
            start += size
        return tuple(out)

    columns = []
    for idx in range(total):
        unit = np.zeros(total, dtype=np.int64)
        unit[idx] = 1
        residuals = constraints(unflatten(unit))
        flat = [as_ints(res).ravel() for res in residuals]
        columns.append(np.concatenate(flat) if flat else np.zeros(0, dtype=np.int64))

    system = field(np.array(columns, dtype=np.int64).T.reshape(-1, total))
    return [unflatten(as_ints(row)) for row in null_space(system)]


def solve_sandwich(
    field: type[FieldArray],
    shape: tuple[int, int],
    equations: Sequence[Sequence[tuple[FieldArray, FieldArray]]],
) -> list[FieldArray]:
    """
    Basis of all F of the given shape with sum(L @ F @ R) = 0 for every equation.

    Uses vec(L F R) = (L kron R^T) vec(F) for row-major vec.

    Args:
        field: The prime field
        shape: (rows, cols) of the unknown F
        equations: Each equation is a list of (L, R) terms

    Returns:
        list: Basis matrices of the solution space
    """
    rows, cols = shape
    size = rows * cols
    if size == 0:
        return []
    p = field.characteristic
    blocks = []
    for terms in equations:
        system = None
        for left, right in terms:
            term = np.kron(as_ints(left), as_ints(right).T)
            system = term if system is None else system + term
        if system is not None and system.size:
            blocks.append(system.reshape(-1, size) % p)
    if not blocks:
        return [field(row.reshape(rows, cols)) for row in np.eye(size, dtype=np.int64)]
    stacked = field(np.vstack(blocks))
    return [field(as_ints(row).reshape(rows, cols)) for row in null_space(stacked)]
