from __future__ import annotations

from clifford_engine.models.complex import (
    ComplexPair,
    ComplexTarget,
    complex_Q,
    equiv_complex,
    from_complex,
    to_complex,
)
from clifford_engine.models.conformal import (
    ConformalVector,
    cga_embed,
    cga_orthogonal_form,
    cga_Q,
    conformal_parts,
    conformal_quadratic,
    conformal_to_orthogonal,
    n0,
    ni,
    of_v,
    orthogonal_to_conformal,
    up,
)
from clifford_engine.models.presets import ALL_PRESETS, PresetDefinition, get_preset, preset
from clifford_engine.models.quaternion import (
    QuaternionQuad,
    QuaternionTarget,
    equiv_quaternion,
    from_quaternion,
    quaternion_Q,
    to_quaternion,
)

__all__ = [
    "ALL_PRESETS",
    "ComplexPair",
    "ComplexTarget",
    "ConformalVector",
    "PresetDefinition",
    "QuaternionQuad",
    "QuaternionTarget",
    "cga_Q",
    "cga_embed",
    "cga_orthogonal_form",
    "complex_Q",
    "conformal_parts",
    "conformal_quadratic",
    "conformal_to_orthogonal",
    "equiv_complex",
    "equiv_quaternion",
    "from_complex",
    "from_quaternion",
    "get_preset",
    "n0",
    "ni",
    "of_v",
    "orthogonal_to_conformal",
    "preset",
    "quaternion_Q",
    "to_complex",
    "to_quaternion",
    "up",
]
