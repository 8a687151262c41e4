"""Exact scalar contract shared by every engine.

Coefficients are `fractions.Fraction` by default. Any commutative ring whose
elements support ``+``, ``*``, unary ``-`` and ``==`` (comparable against the
integers ``0`` and ``1``) can be used for multivector coefficients; division
is only demanded by operations that need a field.

Metric entries are always rational. Integral metric factors and reordering
signs act on ring coefficients through repeated addition, so a ring element
only ever meets ``*`` with another element of its own ring.
"""

from __future__ import annotations

import numbers
from fractions import Fraction
from typing import Any, Iterable, Protocol, runtime_checkable

from clifford_engine.domain import ScalarContractError, ScalarParseError

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


@runtime_checkable
class RingScalar(Protocol):
    """Operations a coefficient type must provide."""

    def __add__(self, other: Any) -> Any: ...

    def __mul__(self, other: Any) -> Any: ...

    def __neg__(self) -> Any: ...

    def __eq__(self, other: object) -> bool: ...


def to_scalar(value: object) -> Any:
    """Coerces rationals and rational strings to `Fraction`; ring elements pass through."""

    if isinstance(value, bool):
        raise ScalarParseError(f"booleans are not scalars: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Rational):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, numbers.Number):
        raise ScalarParseError(f"{type(value).__name__} values are not exact scalars: {value!r}")
    if isinstance(value, RingScalar):
        return value
    raise ScalarParseError(f"cannot interpret {value!r} as a scalar")


def to_rational(value: object) -> Fraction:
    """Like `to_scalar`, but refuses ring elements; metric entries use this."""

    scalar = to_scalar(value)
    if not isinstance(scalar, Fraction):
        raise ScalarParseError(f"metric entries must be rational, got {type(scalar).__name__}")
    return scalar


def ring_mul(left: Any, right: Any) -> Any:
    """Product of two scalars where a rational factor may meet a ring element."""

    left_rational = isinstance(left, (int, Fraction))
    right_rational = isinstance(right, (int, Fraction))
    if left_rational == right_rational:
        return left * right
    rational, element = (Fraction(left), right) if left_rational else (Fraction(right), left)
    if rational.denominator == 1:
        return _integer_multiple(rational.numerator, element)
    try:
        return element * rational
    except TypeError as exc:
        raise ScalarContractError(
            f"{type(element).__name__} coefficients cannot be scaled by the non-integral factor {rational}"
        ) from exc


def _integer_multiple(count: int, element: Any) -> Any:
    if count < 0:
        return -_integer_multiple(-count, element)
    total: Any = None
    addend = element
    while count:
        if count & 1:
            total = addend if total is None else total + addend
        count >>= 1
        if count:
            addend = addend + addend
    return ZERO if total is None else total


def ring_sum(values: Iterable[Any]) -> Any:
    """Sum that skips zeros, so rational zeros never meet ring elements."""

    total: Any = None
    for value in values:
        if value == 0:
            continue
        total = value if total is None else total + value
    return ZERO if total is None else total


def parse_rational(text: str) -> Fraction:
    """Reads ``"3"``, ``"-1/2"`` style literals."""

    cleaned = text.strip()
    numerator, sep, denominator = cleaned.partition("/")
    try:
        num = int(numerator)
        den = int(denominator) if sep else 1
    except ValueError as exc:
        raise ScalarParseError(f"not a rational literal: {text!r}") from exc
    if den == 0:
        raise ScalarParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value: object) -> str:
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def require_division(sample: object, *, operation: str) -> None:
    """Fails when the scalar type cannot divide."""

    if not hasattr(type(sample), "__truediv__"):
        raise ScalarContractError(f"{operation} requires a scalar field; {type(sample).__name__} has no division")
