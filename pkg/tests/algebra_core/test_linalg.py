import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from src.algebra_core import linalg

GF2 = linalg.prime_field(2)
GF3 = linalg.prime_field(3)


@st.composite
def matrices(draw, field=GF3, max_side=4):
    rows = draw(st.integers(0, max_side))
    cols = draw(st.integers(1, max_side))
    p = field.characteristic
    size = rows * cols
    values = draw(st.lists(st.integers(0, p - 1), min_size=size, max_size=size))
    return linalg.from_ints(field, np.array(values, dtype=np.int64).reshape(rows, cols))


@given(matrices())
def test_row_space_is_idempotent(mat):
    once = linalg.row_space(mat)
    assert linalg.equal(linalg.row_space(once), once)
    assert once.shape[0] == linalg.rank(mat)


@given(matrices())
def test_null_space_is_annihilated(mat):
    kernel = linalg.null_space(mat)
    assert kernel.shape[0] + linalg.rank(mat) == mat.shape[1]
    assert linalg.rank(kernel) == kernel.shape[0]
    if kernel.shape[0] and mat.shape[0]:
        assert linalg.is_zero(linalg.matmul(mat, kernel.T))


@given(matrices(), matrices())
def test_intersection_lies_in_both(first, second):
    if first.shape[1] != second.shape[1]:
        return
    u, w = linalg.row_space(first), linalg.row_space(second)
    meet = linalg.intersection(u, w)
    assert linalg.contains(u, meet) and linalg.contains(w, meet)
    total = linalg.subspace_sum(GF3, [u, w], u.shape[1])
    assert meet.shape[0] + total.shape[0] == u.shape[0] + w.shape[0]


@given(matrices(max_side=3))
def test_inverse_exists_exactly_for_full_rank(mat):
    n = mat.shape[1]
    square = linalg.from_ints(GF3, np.resize(linalg.as_ints(mat), (n, n)))
    inverse = linalg.inverse(square)
    if linalg.rank(square) == n:
        assert linalg.equal(linalg.matmul(inverse, square), linalg.identity(GF3, n))
    else:
        assert inverse is None


def test_null_space_edge_shapes():
    assert linalg.null_space(linalg.identity(GF3, 3)).shape == (0, 3)
    empty = linalg.null_space(GF3.Zeros((0, 2)))
    assert linalg.equal(empty, linalg.identity(GF3, 2))
    kernel = linalg.null_space(linalg.from_ints(GF2, [[1, 1, 0]]))
    assert kernel.shape == (2, 3)
    assert linalg.is_zero(linalg.matmul(linalg.from_ints(GF2, [[1, 1, 0]]), kernel.T))


def test_inverse_over_f3():
    mat = linalg.from_ints(GF3, [[1, 2], [0, 1]])
    inverse = linalg.inverse(mat)
    assert linalg.equal(inverse, linalg.from_ints(GF3, [[1, 1], [0, 1]]))
    assert linalg.inverse(linalg.from_ints(GF3, [[1, 2], [2, 1]])) is None
    assert linalg.inverse(GF3.Zeros((0, 0))).shape == (0, 0)


def test_complement_projection_splits():
    basis = linalg.row_space(linalg.from_ints(GF2, [[1, 1, 0]]))
    proj, sect = linalg.complement_projection(basis, 3)
    assert linalg.equal(linalg.matmul(proj, sect), linalg.identity(GF2, 2))
    assert linalg.is_zero(linalg.matmul(proj, basis.T))


def test_subspace_count():
    assert linalg.count_subspaces(2, 2) == 5
    assert linalg.count_subspaces(2, 3) == 16


def test_solve_linear_maps_finds_commutant():
    # matrices commuting with a nilpotent Jordan block are polynomials in it
    nilpotent = linalg.from_ints(GF2, [[0, 1], [0, 0]])
    basis = linalg.solve_linear_maps(
        GF2,
        [(2, 2)],
        lambda maps: [
            linalg.matmul(maps[0], nilpotent) - linalg.matmul(nilpotent, maps[0])
        ],
    )
    assert len(basis) == 2
