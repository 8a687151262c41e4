from __future__ import annotations

from clifford_engine.engine.dispatch import GeometricAlgebra
from clifford_engine.engine.fast import (
    blade_product_diagonal,
    build_cayley_table,
    geometric_product,
    left_contraction,
    scalar_product,
    wedge_product,
)
from clifford_engine.engine.oracle import (
    TensorElement,
    confluence_check,
    normalize,
    product_general,
    tensor_mul,
)

__all__ = [
    "GeometricAlgebra",
    "TensorElement",
    "blade_product_diagonal",
    "build_cayley_table",
    "confluence_check",
    "geometric_product",
    "left_contraction",
    "normalize",
    "product_general",
    "scalar_product",
    "tensor_mul",
    "wedge_product",
]
