from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable

from clifford_engine.algebra.multivector import Multivector, algebra_map, iota
from clifford_engine.domain import (
    DimensionMismatchError,
    EngineAssertionError,
    MetricMismatchError,
    NotInvertibleError,
)
from clifford_engine.engine.fast import ProductFn, geometric_product
from clifford_engine.forms.quadratic import FieldVector, QuadraticForm, quadratic_eval
from clifford_engine.forms.scalars import ONE, require_division, ring_mul, to_scalar
from clifford_engine.structure.conjugations import reverse


@dataclass(frozen=True, slots=True)
class Versor:
    """scalar · ι(v_1) · … · ι(v_k), with the product cached on construction."""

    form: QuadraticForm
    generators: tuple[FieldVector, ...] = ()
    scalar: Any = ONE
    product: ProductFn = field(default=geometric_product, repr=False, compare=False)
    value: Multivector = field(init=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "scalar", to_scalar(self.scalar))
        for generator in self.generators:
            if generator.dim != self.form.dim:
                raise DimensionMismatchError(self.form.dim, generator.dim, what="versor generator")
        object.__setattr__(self, "value", self._expand())

    @classmethod
    def identity(cls, form: QuadraticForm, *, product: ProductFn = geometric_product) -> Versor:
        return cls(form, (), ONE, product)

    @classmethod
    def of_vectors(
        cls,
        form: QuadraticForm,
        vectors: Iterable[FieldVector],
        scalar: object = 1,
        *,
        product: ProductFn = geometric_product,
    ) -> Versor:
        return cls(form, tuple(vectors), scalar, product)

    def _expand(self) -> Multivector:
        value = algebra_map(self.scalar, self.form.dim)
        for generator in self.generators:
            value = self.product(self.form, value, iota(generator))
        return value

    def _replace(self, generators: tuple[FieldVector, ...], scalar: Any) -> Versor:
        return Versor(self.form, generators, scalar, self.product)


def versor_mul(u: Versor, w: Versor) -> Versor:
    if u.form.dim != w.form.dim:
        raise DimensionMismatchError(u.form.dim, w.form.dim, what="versor algebra")
    if u.form != w.form:
        raise MetricMismatchError("cannot multiply versors built over different quadratic forms")
    combined = u._replace(u.generators + w.generators, ring_mul(u.scalar, w.scalar))
    expected = u.product(u.form, u.value, w.value)
    if combined.value != expected:
        raise EngineAssertionError(f"versor product cache mismatch: {combined.value} != {expected}")
    return combined


def versor_involute(u: Versor) -> Versor:
    return u._replace(tuple(-generator for generator in u.generators), u.scalar)


def versor_reverse(u: Versor) -> Versor:
    return u._replace(tuple(reversed(u.generators)), u.scalar)


def versor_norm(u: Versor) -> Any:
    """The scalar r with u·reverse(u) = r, checked against the actual product."""

    expected = ring_mul(u.scalar, u.scalar)
    for generator in u.generators:
        expected = ring_mul(expected, quadratic_eval(u.form, generator))
    actual = u.product(u.form, u.value, reverse(u.value))
    if actual != algebra_map(expected, u.form.dim):
        raise EngineAssertionError(
            f"versor times its reverse is {actual}, expected the scalar {expected}"
        )
    return expected


def versor_inverse(u: Versor) -> Versor:
    norm = versor_norm(u)
    if norm == 0:
        raise NotInvertibleError("versor has zero norm (isotropic generator or zero scalar)")
    require_division(norm, operation="versor_inverse")
    return u._replace(tuple(reversed(u.generators)), u.scalar / norm)


def versor_sandwich(u: Versor, x: Multivector) -> Multivector:
    """u · x · u⁻¹."""

    inverse = versor_inverse(u)
    return u.product(u.form, u.product(u.form, u.value, x), inverse.value)
