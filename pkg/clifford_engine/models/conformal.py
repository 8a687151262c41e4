"""Conformal model: V ⊕ span(n0, ni) with Q(x) = ‖x.v‖² − 2·c_n0·c_ni.

Coordinates are laid out as (v_1, …, v_n, c_n0, c_ni), matching the basis
labels e1..en, n0, ni of the cga presets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from clifford_engine.algebra.multivector import Multivector, iota
from clifford_engine.domain import DimensionMismatchError
from clifford_engine.engine.fast import ProductFn, geometric_product
from clifford_engine.forms.quadratic import FieldVector, QuadraticForm, Signature, signature_form
from clifford_engine.forms.scalars import ONE, ZERO, to_scalar
from clifford_engine.structure.lift import AlgebraMorphism, MultivectorTarget, lift

HALF = ONE / 2


@dataclass(frozen=True, slots=True)
class ConformalVector:
    direction: FieldVector
    c_n0: Any = ZERO
    c_ni: Any = ZERO

    def __post_init__(self) -> None:
        object.__setattr__(self, "c_n0", to_scalar(self.c_n0))
        object.__setattr__(self, "c_ni", to_scalar(self.c_ni))

    @property
    def dim(self) -> int:
        return self.direction.dim

    def __add__(self, other: ConformalVector) -> ConformalVector:
        return ConformalVector(self.direction + other.direction, self.c_n0 + other.c_n0, self.c_ni + other.c_ni)

    def __neg__(self) -> ConformalVector:
        return ConformalVector(-self.direction, -self.c_n0, -self.c_ni)

    def scale(self, factor: object) -> ConformalVector:
        c = to_scalar(factor)
        return ConformalVector(self.direction.scale(c), c * self.c_n0, c * self.c_ni)

    def to_field_vector(self) -> FieldVector:
        return FieldVector(self.direction.coords + (self.c_n0, self.c_ni))

    @classmethod
    def from_field_vector(cls, v: FieldVector) -> ConformalVector:
        if v.dim < 2:
            raise DimensionMismatchError(2, v.dim, what="conformal coordinates")
        return cls(FieldVector(v.coords[:-2]), v.coords[-2], v.coords[-1])


def of_v(x: FieldVector) -> ConformalVector:
    return ConformalVector(x, ZERO, ZERO)


def n0(dim: int) -> ConformalVector:
    return ConformalVector(FieldVector.zero(dim), ONE, ZERO)


def ni(dim: int) -> ConformalVector:
    return ConformalVector(FieldVector.zero(dim), ZERO, ONE)


def conformal_parts(x: ConformalVector) -> tuple[FieldVector, Any, Any]:
    return x.direction, x.c_n0, x.c_ni


def norm_squared(x: FieldVector) -> Any:
    """Standard inner product on the coordinates of V."""

    return sum((c * c for c in x.coords), ZERO)


def up(x: FieldVector) -> ConformalVector:
    """n0 + x + ½‖x‖² ni."""

    return n0(x.dim) + of_v(x) + ni(x.dim).scale(HALF * norm_squared(x))


def conformal_quadratic(x: ConformalVector) -> Any:
    """Closed form ‖x.v‖² − 2·c_n0·c_ni, equal to cga_Q evaluated on x."""

    return norm_squared(x.direction) - 2 * x.c_n0 * x.c_ni


@lru_cache(maxsize=8)
def cga_Q(dim: int) -> QuadraticForm:
    """Identity on V, null block on (n0, ni) with B(n0, ni) = −1."""

    size = dim + 2
    rows = [[ZERO] * size for _ in range(size)]
    for axis in range(dim):
        rows[axis][axis] = ONE
    rows[dim][dim + 1] = -ONE
    rows[dim + 1][dim] = -ONE
    return QuadraticForm(tuple(tuple(row) for row in rows))


def cga_embed(x: ConformalVector) -> Multivector:
    return iota(x.to_field_vector())


def cga_orthogonal_form(dim: int) -> QuadraticForm:
    """Same algebra in the orthogonal basis e1..en, ep, em with ep² = 1, em² = −1."""

    return signature_form(Signature(dim + 1, 1, 0))


def conformal_to_orthogonal(dim: int, *, product: ProductFn = geometric_product) -> AlgebraMorphism[Multivector]:
    """n0 ↦ ½(em − ep), ni ↦ em + ep, eᵢ ↦ eᵢ."""

    target_form = cga_orthogonal_form(dim)
    size = dim + 2
    ep = Multivector.blade(size, 1 << dim)
    em = Multivector.blade(size, 1 << (dim + 1))
    images = [Multivector.blade(size, 1 << axis) for axis in range(dim)]
    images.append((em - ep).scale(HALF))
    images.append(em + ep)
    return lift(cga_Q(dim), images, MultivectorTarget(target_form, product))


def orthogonal_to_conformal(dim: int, *, product: ProductFn = geometric_product) -> AlgebraMorphism[Multivector]:
    """ep ↦ ½ni − n0, em ↦ ½ni + n0, eᵢ ↦ eᵢ."""

    size = dim + 2
    origin = Multivector.blade(size, 1 << dim)
    infinity = Multivector.blade(size, 1 << (dim + 1))
    images = [Multivector.blade(size, 1 << axis) for axis in range(dim)]
    images.append(infinity.scale(HALF) - origin)
    images.append(infinity.scale(HALF) + origin)
    return lift(cga_orthogonal_form(dim), images, MultivectorTarget(cga_Q(dim), product))
