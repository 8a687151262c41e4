from __future__ import annotations

from clifford_engine.algebra.blades import (
    SCALAR_BLADE,
    Blade,
    all_blades,
    blade_axes,
    blade_from_axes,
    blade_name,
    default_labels,
    grade,
    reorder_sign,
)
from clifford_engine.algebra.multivector import (
    Multivector,
    algebra_map,
    format_multivector,
    grade_project,
    iota,
    max_grade,
    mv_add,
    mv_scale,
    mv_sum,
    validate_canonical,
)

__all__ = [
    "SCALAR_BLADE",
    "Blade",
    "Multivector",
    "algebra_map",
    "all_blades",
    "blade_axes",
    "blade_from_axes",
    "blade_name",
    "default_labels",
    "format_multivector",
    "grade",
    "grade_project",
    "iota",
    "max_grade",
    "mv_add",
    "mv_scale",
    "mv_sum",
    "reorder_sign",
    "validate_canonical",
]
