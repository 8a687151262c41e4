"""Basis blades as bit sets: bit i set means e_{i+1} is a factor."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from clifford_engine.domain import MAX_DIMENSION, DimensionTooLargeError

Blade = int

SCALAR_BLADE: Blade = 0


def grade(blade: Blade) -> int:
    return blade.bit_count()


def blade_axes(blade: Blade) -> tuple[int, ...]:
    """Zero-based axes of the factors in canonical increasing order."""

    axes = []
    index = 0
    while blade:
        if blade & 1:
            axes.append(index)
        blade >>= 1
        index += 1
    return tuple(axes)


def blade_from_axes(axes: Iterable[int]) -> Blade:
    blade = 0
    for axis in axes:
        if axis >= MAX_DIMENSION:
            raise DimensionTooLargeError(f"axis {axis} exceeds the {MAX_DIMENSION}-vector limit")
        blade |= 1 << axis
    return blade


def blade_sort_key(blade: Blade) -> tuple[int, int]:
    return (grade(blade), blade)


@lru_cache(maxsize=16)
def all_blades(dim: int) -> tuple[Blade, ...]:
    """Every blade of the algebra in (grade, bit pattern) order."""

    check_dimension(dim)
    return tuple(sorted(range(1 << dim), key=blade_sort_key))


def reorder_sign(a: Blade, b: Blade) -> int:
    """(-1)^t where t counts pairs (x in a, y in b) with x > y."""

    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


def default_labels(dim: int) -> tuple[str, ...]:
    return tuple(f"e{axis + 1}" for axis in range(dim))


def blade_name(blade: Blade, labels: Sequence[str] | None = None) -> str:
    """``1`` for the scalar blade, otherwise concatenated labels (``e1e3``)."""

    if blade == SCALAR_BLADE:
        return "1"
    if labels is None:
        return "".join(f"e{axis + 1}" for axis in blade_axes(blade))
    return "".join(labels[axis] for axis in blade_axes(blade))


def check_dimension(dim: int) -> None:
    if dim < 0:
        raise DimensionTooLargeError(f"dimension must be non-negative, got {dim}")
    if dim > MAX_DIMENSION:
        raise DimensionTooLargeError(f"dimension {dim} exceeds the {MAX_DIMENSION}-vector limit")
