"""
Tensor products M ⊗_A N of a right module with a sub-bimodule N of A.

M ⊗_A N is the quotient of M ⊗_F N by the balancing relations
(m * a) ⊗ x - m ⊗ (a * x). The basis vector e_p ⊗ n_s of M ⊗_F N has
index p * dim(N) + s.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.algebra_core import linalg
from src.algebra_core.algebra import Ideal
from src.algebra_core.linalg import FieldArray
from src.algebra_core.modules import ModuleHom, ModuleRep, quotient_module
from src.utils.errors import NotBimodule


@dataclass(frozen=True, eq=False)
class TensorProduct:
    """
    M ⊗_A N with the data needed to push vectors and maps through it.

    `projection` maps M ⊗_F N onto the module and `section` is a linear
    splitting of it.
    """

    module: ModuleRep
    factor: ModuleRep
    bimodule: Ideal
    projection: FieldArray
    section: FieldArray


def _balancing_relations(module: ModuleRep, bimodule: Ideal) -> FieldArray:
    field = module.field
    d, k = module.dim, bimodule.dim
    rows = []
    eye_d = np.eye(d, dtype=np.int64)
    eye_k = np.eye(k, dtype=np.int64)
    for r in range(module.algebra.dim):
        act = module.action_ints[r]
        left = bimodule.left_actions[r]
        for p in range(d):
            for s in range(k):
                row = np.kron(act[:, p], eye_k[s]) - np.kron(eye_d[p], left[:, s])
                rows.append(row)
    if not rows:
        return linalg.zeros(field, 0, d * k)
    return linalg.row_space(linalg.from_ints(field, np.array(rows)))


def tensor_over_algebra(module: ModuleRep, bimodule: Ideal) -> TensorProduct:
    """
    M ⊗_A N as a right A-module through N's right action.

    Args:
        module (ModuleRep): A right A-module M
        bimodule (Ideal): An (A, A)-sub-bimodule N of A

    Returns:
        TensorProduct: The tensor product with its projection and section

    Raises:
        NotBimodule: If N is not an ideal of M's algebra
    """
    if not isinstance(bimodule, Ideal) or bimodule.parent is not module.algebra:
        raise NotBimodule(
            "Tensor factor must be a two-sided ideal of the module's algebra"
        )
    algebra = module.algebra
    field = module.field
    d, k = module.dim, bimodule.dim
    eye_d = np.eye(d, dtype=np.int64)
    ambient_action = [
        np.kron(eye_d, bimodule.right_actions[r]) for r in range(algebra.dim)
    ]
    ambient = ModuleRep(
        algebra,
        d * k,
        tuple(linalg.from_ints(field, a.reshape(d * k, d * k)) for a in ambient_action),
        "M⊗N",
    )
    relations = _balancing_relations(module, bimodule)
    quotient, proj = quotient_module(ambient, relations, f"{module.name or 'M'}⊗I")
    _, sect = linalg.complement_projection(relations, d * k)
    return TensorProduct(quotient, module, bimodule, proj.matrix, sect)


def tensor_hom(f: ModuleHom, source: TensorProduct, target: TensorProduct) -> ModuleHom:
    """The map f ⊗ id between two tensor products with the same bimodule."""
    k = source.bimodule.dim
    lifted = np.kron(linalg.as_ints(f.matrix), np.eye(k, dtype=np.int64))
    lifted = lifted.reshape(f.target.dim * k, f.source.dim * k)
    lifted = linalg.from_ints(f.field, lifted)
    matrix = linalg.chain(target.projection, lifted, source.section)
    return ModuleHom(source.module, target.module, matrix)
