from __future__ import annotations

from clifford_engine.structure.conjugations import (
    Z2Decomposition,
    clifford_conjugate,
    grades_z2,
    involute,
    reverse,
)
from clifford_engine.structure.generators import random_multivector, random_vector
from clifford_engine.structure.lift import AlgebraMorphism, MultivectorTarget, TargetAlgebra, lift
from clifford_engine.structure.versors import (
    Versor,
    versor_inverse,
    versor_involute,
    versor_mul,
    versor_norm,
    versor_reverse,
    versor_sandwich,
)
from clifford_engine.structure.wedge import iota_wedge, vector_rank

__all__ = [
    "AlgebraMorphism",
    "MultivectorTarget",
    "TargetAlgebra",
    "Versor",
    "Z2Decomposition",
    "clifford_conjugate",
    "grades_z2",
    "involute",
    "iota_wedge",
    "lift",
    "random_multivector",
    "random_vector",
    "reverse",
    "vector_rank",
    "versor_inverse",
    "versor_involute",
    "versor_mul",
    "versor_norm",
    "versor_reverse",
    "versor_sandwich",
]
