from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Any, Callable, Iterable, Iterator, Mapping

from clifford_engine.algebra.blades import (
    SCALAR_BLADE,
    Blade,
    blade_name,
    blade_sort_key,
    check_dimension,
    grade,
)
from clifford_engine.domain import DimensionMismatchError, DimensionTooLargeError
from clifford_engine.forms.quadratic import FieldVector
from clifford_engine.forms.scalars import ZERO, format_rational, ring_mul, to_scalar


@dataclass(frozen=True, slots=True)
class Multivector:
    """Sparse map from basis blade to coefficient, canonical and immutable.

    Terms are kept sorted by (grade, bit pattern) with zero coefficients
    dropped, so structural equality is algebraic equality.
    """

    dim: int
    terms: tuple[tuple[Blade, Any], ...] = ()

    def __post_init__(self) -> None:
        check_dimension(self.dim)
        merged: dict[Blade, Any] = {}
        for blade, coef in self.terms:
            if blade < 0 or blade >> self.dim:
                raise DimensionTooLargeError(f"blade {blade:b} does not fit dimension {self.dim}")
            value = to_scalar(coef)
            if value == 0:
                continue
            merged[blade] = merged[blade] + value if blade in merged else value
        canonical = tuple(
            (blade, merged[blade]) for blade in sorted(merged, key=blade_sort_key) if merged[blade] != 0
        )
        object.__setattr__(self, "terms", canonical)

    @classmethod
    def zero(cls, dim: int) -> Multivector:
        return cls(dim)

    @classmethod
    def from_mapping(cls, dim: int, coefficients: Mapping[Blade, object]) -> Multivector:
        return cls(dim, tuple(coefficients.items()))

    @classmethod
    def blade(cls, dim: int, blade: Blade, coef: object = 1) -> Multivector:
        return cls(dim, ((blade, coef),))

    @property
    def coefficients(self) -> Mapping[Blade, Any]:
        return MappingProxyType(dict(self.terms))

    def coefficient(self, blade: Blade) -> Any:
        for key, value in self.terms:
            if key == blade:
                return value
        return ZERO

    def scalar_part(self) -> Any:
        return self.coefficient(SCALAR_BLADE)

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return all(blade == SCALAR_BLADE for blade, _ in self.terms)

    def blades(self) -> tuple[Blade, ...]:
        return tuple(blade for blade, _ in self.terms)

    def __iter__(self) -> Iterator[tuple[Blade, Any]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: Multivector) -> Multivector:
        return mv_add(self, other)

    def __sub__(self, other: Multivector) -> Multivector:
        return mv_add(self, -other)

    def __neg__(self) -> Multivector:
        return Multivector(self.dim, tuple((blade, -coef) for blade, coef in self.terms))

    def scale(self, factor: object) -> Multivector:
        return mv_scale(factor, self)

    def map_by_grade(self, factor: Callable[[int], int]) -> Multivector:
        """Multiplies each term by ``factor(grade)``."""

        return Multivector(
            self.dim, tuple((blade, ring_mul(factor(grade(blade)), coef)) for blade, coef in self.terms)
        )

    def to_text(self, labels: tuple[str, ...] | None = None) -> str:
        return format_multivector(self, labels)

    def __str__(self) -> str:
        return format_multivector(self)


def mv_add(a: Multivector, b: Multivector) -> Multivector:
    _same_dim(a, b)
    return Multivector(a.dim, a.terms + b.terms)


def mv_sum(dim: int, items: Iterable[Multivector]) -> Multivector:
    terms: list[tuple[Blade, Any]] = []
    for item in items:
        if item.dim != dim:
            raise DimensionMismatchError(dim, item.dim, what="summand")
        terms.extend(item.terms)
    return Multivector(dim, tuple(terms))


def mv_scale(factor: object, a: Multivector) -> Multivector:
    c = to_scalar(factor)
    if c == 0:
        return Multivector.zero(a.dim)
    return Multivector(a.dim, tuple((blade, ring_mul(c, coef)) for blade, coef in a.terms))


def algebra_map(value: object, dim: int) -> Multivector:
    """The scalar embedding R → G(V)."""

    return Multivector(dim, ((SCALAR_BLADE, value),))


def iota(v: FieldVector) -> Multivector:
    """The linear embedding V → G(V); grade 1 only."""

    return Multivector(v.dim, tuple((1 << axis, coef) for axis, coef in enumerate(v.coords)))


def grade_project(a: Multivector, k: int) -> Multivector:
    return Multivector(a.dim, tuple((blade, coef) for blade, coef in a.terms if grade(blade) == k))


def max_grade(a: Multivector) -> int | None:
    if a.is_zero():
        return None
    return max(grade(blade) for blade, _ in a.terms)


def validate_canonical(a: Multivector) -> None:
    """Debug validator for the canonical-form invariant."""

    previous = None
    for blade, coef in a.terms:
        if coef == 0:
            raise AssertionError(f"zero coefficient stored for blade {blade:b}")
        if blade >> a.dim:
            raise AssertionError(f"blade {blade:b} outside dimension {a.dim}")
        key = blade_sort_key(blade)
        if previous is not None and key <= previous:
            raise AssertionError("terms are not in (grade, bit pattern) order")
        previous = key


def format_multivector(a: Multivector, labels: tuple[str, ...] | None = None) -> str:
    """Human rendering such as ``1 - 3/2 e1e2``; ``0`` for the zero multivector."""

    if a.is_zero():
        return "0"
    pieces: list[str] = []
    for index, (blade, coef) in enumerate(a.terms):
        negative = isinstance(coef, Fraction) and coef < 0
        magnitude = -coef if negative else coef
        name = blade_name(blade, labels)
        if blade == SCALAR_BLADE:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = name
        else:
            body = f"{format_rational(magnitude)} {name}"
        if index == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


def _same_dim(a: Multivector, b: Multivector) -> None:
    if a.dim != b.dim:
        raise DimensionMismatchError(a.dim, b.dim, what="multivector")
