"""Universal property: relation-respecting basis images extend to algebra morphisms."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Generic, Protocol, Sequence, TypeVar

from clifford_engine.algebra.blades import blade_axes
from clifford_engine.algebra.multivector import Multivector, algebra_map
from clifford_engine.domain import DimensionMismatchError, LiftRelationError
from clifford_engine.engine.fast import ProductFn, geometric_product
from clifford_engine.forms.quadratic import QuadraticForm

logger = logging.getLogger(__name__)

T = TypeVar("T")


class TargetAlgebra(Protocol[T]):
    """Associative unital algebra over the scalars, with decidable equality."""

    def add(self, x: T, y: T) -> T: ...

    def mul(self, x: T, y: T) -> T: ...

    def neg(self, x: T) -> T: ...

    def one(self) -> T: ...

    def from_scalar(self, value: Any) -> T: ...

    def scale(self, value: Any, x: T) -> T: ...

    def equal(self, x: T, y: T) -> bool: ...


@dataclass(frozen=True, slots=True)
class MultivectorTarget:
    """G(W) for some form on W, with a chosen product engine."""

    form: QuadraticForm
    product: ProductFn = geometric_product

    def add(self, x: Multivector, y: Multivector) -> Multivector:
        return x + y

    def mul(self, x: Multivector, y: Multivector) -> Multivector:
        return self.product(self.form, x, y)

    def neg(self, x: Multivector) -> Multivector:
        return -x

    def one(self) -> Multivector:
        return algebra_map(1, self.form.dim)

    def from_scalar(self, value: Any) -> Multivector:
        return algebra_map(value, self.form.dim)

    def scale(self, value: Any, x: Multivector) -> Multivector:
        return x.scale(value)

    def equal(self, x: Multivector, y: Multivector) -> bool:
        return x == y


@dataclass(frozen=True, slots=True)
class AlgebraMorphism(Generic[T]):
    """The lifted map; sends e_{i1}…e_{ik} to f(e_{i1})…f(e_{ik})."""

    form: QuadraticForm
    images: tuple[T, ...]
    target: TargetAlgebra[T]

    def __call__(self, a: Multivector) -> T:
        if a.dim != self.form.dim:
            raise DimensionMismatchError(self.form.dim, a.dim, what="lift argument")
        result = self.target.from_scalar(0)
        for blade, coef in a.terms:
            term = self.target.one()
            for axis in blade_axes(blade):
                term = self.target.mul(term, self.images[axis])
            result = self.target.add(result, self.target.scale(coef, term))
        return result


def lift(form: QuadraticForm, images: Sequence[T], target: TargetAlgebra[T]) -> AlgebraMorphism[T]:
    """Builds the unique morphism extending ``images`` after checking the basis relations.

    f(e_i)² = Q(e_i)·1 for every i and f(e_i)f(e_j) + f(e_j)f(e_i) = polar(e_i, e_j)·1
    for i < j; the polarized pair condition is equivalent to f(v)² = Q(v)·1 for all v.
    """

    if len(images) != form.dim:
        raise DimensionMismatchError(form.dim, len(images), what="basis images")
    for i, fi in enumerate(images):
        square = target.mul(fi, fi)
        expected = target.from_scalar(form.basis_square(i))
        if not target.equal(square, expected):
            logger.warning("lift rejected: f(e%d) squares to %s", i + 1, square)
            raise LiftRelationError(f"f(e{i + 1})*f(e{i + 1}) = Q(e{i + 1})", square, expected)
        for j in range(i + 1, form.dim):
            fj = images[j]
            anticommutator = target.add(target.mul(fi, fj), target.mul(fj, fi))
            expected = target.from_scalar(form.basis_polar(i, j))
            if not target.equal(anticommutator, expected):
                logger.warning("lift rejected: f(e%d), f(e%d) anticommutator is %s", i + 1, j + 1, anticommutator)
                raise LiftRelationError(
                    f"f(e{i + 1})*f(e{j + 1}) + f(e{j + 1})*f(e{i + 1}) = polar(e{i + 1}, e{j + 1})",
                    anticommutator,
                    expected,
                )
    return AlgebraMorphism(form=form, images=tuple(images), target=target)
