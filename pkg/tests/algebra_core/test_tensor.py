from src.algebra_core.modules import regular_module, zero_module
from src.algebra_core.tensor import tensor_over_algebra


def test_free_module_tensor_is_the_ideal(dual):
    tensor = tensor_over_algebra(regular_module(dual.algebra), dual.ideal)
    assert tensor.module.dim == dual.ideal.dim == 1


def test_simple_tensor_ideal(dual, dual_simple):
    S, _ = dual_simple
    assert tensor_over_algebra(S, dual.ideal).module.dim == 1


def test_zero_module_tensor(dual):
    assert tensor_over_algebra(zero_module(dual.algebra), dual.ideal).module.dim == 0


def test_projection_and_section(fat_point):
    tensor = tensor_over_algebra(regular_module(fat_point.algebra), fat_point.ideal)
    assert tensor.module.dim == 2
    product = tensor.projection @ tensor.section
    assert (product == type(product).Identity(2)).all()
