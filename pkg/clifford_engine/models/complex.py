from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from clifford_engine.algebra.multivector import Multivector
from clifford_engine.forms.quadratic import QuadraticForm
from clifford_engine.forms.scalars import ONE, ZERO, to_scalar
from clifford_engine.structure.lift import AlgebraMorphism, lift


@dataclass(frozen=True, slots=True)
class ComplexPair:
    """re + im·i with i² = -1."""

    re: Any = ZERO
    im: Any = ZERO

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", to_scalar(self.re))
        object.__setattr__(self, "im", to_scalar(self.im))

    def __add__(self, other: ComplexPair) -> ComplexPair:
        return ComplexPair(self.re + other.re, self.im + other.im)

    def __neg__(self) -> ComplexPair:
        return ComplexPair(-self.re, -self.im)

    def __mul__(self, other: ComplexPair) -> ComplexPair:
        return ComplexPair(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )


I = ComplexPair(ZERO, ONE)


@dataclass(frozen=True, slots=True)
class ComplexTarget:
    def add(self, x: ComplexPair, y: ComplexPair) -> ComplexPair:
        return x + y

    def mul(self, x: ComplexPair, y: ComplexPair) -> ComplexPair:
        return x * y

    def neg(self, x: ComplexPair) -> ComplexPair:
        return -x

    def one(self) -> ComplexPair:
        return ComplexPair(ONE)

    def from_scalar(self, value: Any) -> ComplexPair:
        return ComplexPair(value)

    def scale(self, value: Any, x: ComplexPair) -> ComplexPair:
        return ComplexPair(value * x.re, value * x.im)

    def equal(self, x: ComplexPair, y: ComplexPair) -> bool:
        return x == y


def complex_Q() -> QuadraticForm:
    """Q(r) = -r² on a one-dimensional space."""

    return QuadraticForm.diagonal_of([-ONE])


@lru_cache(maxsize=1)
def equiv_complex() -> AlgebraMorphism[ComplexPair]:
    return lift(complex_Q(), [I], ComplexTarget())


def to_complex(a: Multivector) -> ComplexPair:
    return equiv_complex()(a)


def from_complex(z: ComplexPair) -> Multivector:
    return Multivector(1, ((0, z.re), (1, z.im)))
