"""
Functors between A-modules and B = A/I-modules.

i inflates, i^L(M) = M/MI, j(M) = MI and ĵ(M) = M ⊗_A I. The natural
map ĵ(M) -> j(M) sends m ⊗ x to m * x and is always surjective.
"""

from __future__ import annotations

import numpy as np

from src.algebra_core import linalg
from src.algebra_core.algebra import SquareZeroExtension
from src.algebra_core.modules import (
    ModuleHom,
    ModuleRep,
    corestrict,
    factor_through_quotient,
    hom_dimension,
    ideal_image_subspace,
    inflate as inflate_module,
    quotient_module,
    restrict,
    submodule,
)
from src.algebra_core.tensor import TensorProduct, tensor_hom, tensor_over_algebra
from src.pair_category.functors import AdjunctionCount


def inflate(ext: SquareZeroExtension, module: ModuleRep) -> ModuleRep:
    """i: B -> A, the same vector space with A acting through A -> A/I."""
    return inflate_module(module, ext.quotient)


def inflate_hom(ext: SquareZeroExtension, f: ModuleHom) -> ModuleHom:
    return ModuleHom(inflate(ext, f.source), inflate(ext, f.target), f.matrix)


def _ideal_image(ext: SquareZeroExtension, module: ModuleRep):
    return ideal_image_subspace(module, ext.ideal.vectors())


def i_left_adjoint(ext: SquareZeroExtension, module: ModuleRep) -> ModuleRep:
    """i^L(M) = M / MI as an A/I-module."""
    quotient, _ = quotient_module(module, _ideal_image(ext, module))
    return restrict(quotient, ext.quotient)


def i_left_adjoint_unit(ext: SquareZeroExtension, module: ModuleRep) -> ModuleHom:
    """The canonical surjection M -> i(i^L(M))."""
    quotient, projection = quotient_module(module, _ideal_image(ext, module))
    top = inflate(ext, restrict(quotient, ext.quotient))
    return ModuleHom(module, top, projection.matrix)


def i_left_adjoint_hom(ext: SquareZeroExtension, f: ModuleHom) -> ModuleHom:
    source_unit = i_left_adjoint_unit(ext, f.source)
    target_unit = i_left_adjoint_unit(ext, f.target)
    induced = factor_through_quotient(f.then(target_unit), source_unit)
    return ModuleHom(
        restrict(source_unit.target, ext.quotient),
        restrict(target_unit.target, ext.quotient),
        induced.matrix,
    )


def j_inclusion(ext: SquareZeroExtension, module: ModuleRep) -> ModuleHom:
    """The inclusion MI -> M as a map of A-modules."""
    _, inclusion = submodule(module, _ideal_image(ext, module), "MI")
    return inclusion


def j_functor(ext: SquareZeroExtension, module: ModuleRep) -> ModuleRep:
    """j(M) = MI as an A/I-module."""
    return restrict(j_inclusion(ext, module).source, ext.quotient)


def j_hom(ext: SquareZeroExtension, f: ModuleHom) -> ModuleHom:
    """The restriction MI -> NI of f."""
    source_inc = j_inclusion(ext, f.source)
    target_inc = j_inclusion(ext, f.target)
    restricted = corestrict(source_inc.then(f), target_inc)
    return ModuleHom(
        restrict(source_inc.source, ext.quotient),
        restrict(target_inc.source, ext.quotient),
        restricted.matrix,
    )


def j_sequence(
    ext: SquareZeroExtension, module: ModuleRep
) -> tuple[ModuleHom, ModuleHom]:
    """0 -> i(j M) -> M -> i(i^L M) -> 0 as (inclusion, projection)."""
    return j_inclusion(ext, module), i_left_adjoint_unit(ext, module)


def j_tilde_tensor(ext: SquareZeroExtension, module: ModuleRep) -> TensorProduct:
    return tensor_over_algebra(module, ext.ideal)


def j_tilde(ext: SquareZeroExtension, module: ModuleRep) -> ModuleRep:
    """ĵ(M) = M ⊗_A I as an A/I-module; I * I = 0 makes I act by zero."""
    return restrict(j_tilde_tensor(ext, module).module, ext.quotient)


def j_tilde_hom(ext: SquareZeroExtension, f: ModuleHom) -> ModuleHom:
    source = j_tilde_tensor(ext, f.source)
    target = j_tilde_tensor(ext, f.target)
    induced = tensor_hom(f, source, target)
    return ModuleHom(
        restrict(source.module, ext.quotient),
        restrict(target.module, ext.quotient),
        induced.matrix,
    )


def multiplication_matrix(tensor: TensorProduct):
    """Matrix of ĵ(M) -> M, m ⊗ x -> m * x, in the coordinates of tensor.module."""
    module, ideal = tensor.factor, tensor.bimodule
    d, k = module.dim, ideal.dim
    raw = np.zeros((d, d * k), dtype=np.int64)
    for s, vec in enumerate(ideal.vectors()):
        action = linalg.as_ints(module.act(vec))
        for p in range(d):
            raw[:, p * k + s] = action[:, p]
    raw = linalg.from_ints(module.field, raw)
    return linalg.matmul(raw, tensor.section)


def jtilde_to_j(ext: SquareZeroExtension, module: ModuleRep) -> ModuleHom:
    """
    The natural map ĵ(M) -> j(M) induced by multiplication.

    Args:
        ext (SquareZeroExtension): The fixed (A, I)
        module (ModuleRep): An A-module M

    Returns:
        ModuleHom: A surjection of A/I-modules M ⊗_A I -> MI
    """
    tensor = j_tilde_tensor(ext, module)
    inclusion = j_inclusion(ext, module)
    to_module = ModuleHom(tensor.module, module, multiplication_matrix(tensor))
    into_mi = corestrict(to_module, inclusion)
    return ModuleHom(
        restrict(tensor.module, ext.quotient),
        restrict(inclusion.source, ext.quotient),
        into_mi.matrix,
    )


def i_adjunction_count(
    ext: SquareZeroExtension, module: ModuleRep, b_module: ModuleRep
) -> AdjunctionCount:
    """dim Hom_B(i^L M, N) against dim Hom_A(M, i N)."""
    return AdjunctionCount(
        hom_dimension(i_left_adjoint(ext, module), b_module),
        hom_dimension(module, inflate(ext, b_module)),
    )
