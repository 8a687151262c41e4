from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from clifford_engine.algebra.multivector import Multivector
from clifford_engine.forms.quadratic import QuadraticForm, Signature, signature_form
from clifford_engine.forms.scalars import ONE, ZERO, to_scalar
from clifford_engine.structure.lift import AlgebraMorphism, lift


@dataclass(frozen=True, slots=True)
class QuaternionQuad:
    """r + i·i + j·j + k·k under the Hamilton relations."""

    r: Any = ZERO
    i: Any = ZERO
    j: Any = ZERO
    k: Any = ZERO

    def __post_init__(self) -> None:
        for name in ("r", "i", "j", "k"):
            object.__setattr__(self, name, to_scalar(getattr(self, name)))

    def __add__(self, other: QuaternionQuad) -> QuaternionQuad:
        return QuaternionQuad(self.r + other.r, self.i + other.i, self.j + other.j, self.k + other.k)

    def __neg__(self) -> QuaternionQuad:
        return QuaternionQuad(-self.r, -self.i, -self.j, -self.k)

    def __mul__(self, other: QuaternionQuad) -> QuaternionQuad:
        a1, b1, c1, d1 = self.r, self.i, self.j, self.k
        a2, b2, c2, d2 = other.r, other.i, other.j, other.k
        return QuaternionQuad(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )


QUATERNION_UNITS = {
    "1": QuaternionQuad(ONE),
    "i": QuaternionQuad(ZERO, ONE),
    "j": QuaternionQuad(ZERO, ZERO, ONE),
    "k": QuaternionQuad(ZERO, ZERO, ZERO, ONE),
}


@dataclass(frozen=True, slots=True)
class QuaternionTarget:
    def add(self, x: QuaternionQuad, y: QuaternionQuad) -> QuaternionQuad:
        return x + y

    def mul(self, x: QuaternionQuad, y: QuaternionQuad) -> QuaternionQuad:
        return x * y

    def neg(self, x: QuaternionQuad) -> QuaternionQuad:
        return -x

    def one(self) -> QuaternionQuad:
        return QuaternionQuad(ONE)

    def from_scalar(self, value: Any) -> QuaternionQuad:
        return QuaternionQuad(value)

    def scale(self, value: Any, x: QuaternionQuad) -> QuaternionQuad:
        return QuaternionQuad(value * x.r, value * x.i, value * x.j, value * x.k)

    def equal(self, x: QuaternionQuad, y: QuaternionQuad) -> bool:
        return x == y


def quaternion_Q() -> QuadraticForm:
    """Q(x, y) = -x² - y², signature (0, 2, 0)."""

    return signature_form(Signature(0, 2, 0))


@lru_cache(maxsize=1)
def equiv_quaternion() -> AlgebraMorphism[QuaternionQuad]:
    return lift(quaternion_Q(), [QUATERNION_UNITS["i"], QUATERNION_UNITS["j"]], QuaternionTarget())


def to_quaternion(a: Multivector) -> QuaternionQuad:
    """1, e1, e2, e1e2 map to 1, i, j, k."""

    return equiv_quaternion()(a)


def from_quaternion(h: QuaternionQuad) -> Multivector:
    return Multivector(2, ((0b00, h.r), (0b01, h.i), (0b10, h.j), (0b11, h.k)))
