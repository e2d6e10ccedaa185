import numpy as np
import pytest

from src.algebra_core.algebra import (
    algebra_from_quadruples,
    square_zero_extension,
    validate_ideal,
)
from src.utils.errors import (
    AlgebraInvalid,
    IdealNotSquareZero,
    NoUnit,
    NotAssociative,
    NotPrimeCharacteristic,
    NotTwoSided,
)

DUAL_MUL = [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1]]
TRIANGULAR_MUL = [[0, 0, 0, 1], [0, 1, 1, 1], [1, 2, 1, 1], [2, 2, 2, 1]]


def test_dual_numbers_table():
    algebra = algebra_from_quadruples(2, ["1", "t"], DUAL_MUL, [1, 0])
    assert algebra.dim == 2
    t = algebra.basis_vector(1)
    assert not algebra.multiply(t, t).any()


def test_upper_triangular_table():
    labels = ["e11", "e12", "e22"]
    algebra = algebra_from_quadruples(2, labels, TRIANGULAR_MUL, [1, 0, 1])
    assert algebra.dim == 3
    e11, e12 = algebra.basis_vector(0), algebra.basis_vector(1)
    assert list(algebra.multiply(e11, e12)) == [0, 1, 0]
    assert not algebra.multiply(e12, e11).any()


def test_broken_associativity_is_reported():
    # a*a = b, a*b = 0, b*a = a: (aa)a = a but a(aa) = 0
    products = [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1], [0, 2, 2, 1], [2, 0, 2, 1]]
    products += [[1, 1, 2, 1], [2, 1, 1, 1]]
    with pytest.raises(NotAssociative):
        algebra_from_quadruples(2, ["1", "a", "b"], products, [1, 0, 0])


def test_wrong_unit():
    with pytest.raises(NoUnit):
        algebra_from_quadruples(2, ["1", "t"], DUAL_MUL, [0, 1])


def test_characteristic_must_be_prime():
    with pytest.raises(NotPrimeCharacteristic):
        algebra_from_quadruples(4, ["1", "t"], DUAL_MUL, [1, 0])


def test_malformed_quadruple():
    with pytest.raises(AlgebraInvalid):
        algebra_from_quadruples(2, ["1", "t"], [[0, 0, 0]], [1, 0])


def test_whole_algebra_is_not_square_zero():
    algebra = algebra_from_quadruples(2, ["1", "t"], DUAL_MUL, [1, 0])
    with pytest.raises(IdealNotSquareZero):
        square_zero_extension(algebra, [[1, 0], [0, 1]])


def test_one_sided_ideal_rejected():
    labels = ["e11", "e12", "e22"]
    algebra = algebra_from_quadruples(2, labels, TRIANGULAR_MUL, [1, 0, 1])
    with pytest.raises(NotTwoSided):
        validate_ideal(algebra, [[1, 0, 0]])


def test_quotient_of_triangular_algebra(triangular):
    B = triangular.b_algebra
    assert B.dim == 2
    # the diagonal idempotents survive and stay orthogonal
    products = B.structure_constants
    assert np.array_equal(products[0, 1], [0, 0])
    assert np.array_equal(B.unit, [1, 1])


def test_zero_ideal_gives_the_algebra_back(semisimple):
    assert semisimple.ideal.dim == 0
    assert semisimple.b_algebra.dim == semisimple.algebra.dim
