"""Random multivectors built the way the induction principle builds them.

Every element arises from scalars, vectors, sums and products, so the
generator draws a derivation tree over exactly those four constructors.
"""

from __future__ import annotations

import random
from fractions import Fraction

from clifford_engine.algebra.multivector import Multivector, algebra_map, iota
from clifford_engine.engine.fast import ProductFn, geometric_product
from clifford_engine.forms.quadratic import FieldVector, QuadraticForm

_NUMERATOR_RANGE = 3
_DENOMINATOR_RANGE = 3


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(
        rng.randint(-_NUMERATOR_RANGE, _NUMERATOR_RANGE), rng.randint(1, _DENOMINATOR_RANGE)
    )


def random_vector(rng: random.Random, dim: int) -> FieldVector:
    return FieldVector(tuple(random_rational(rng) for _ in range(dim)))


def random_multivector(
    seed: int,
    dim: int,
    form: QuadraticForm,
    depth: int,
    *,
    product: ProductFn = geometric_product,
) -> Multivector:
    """Deterministic per seed; depth bounds the derivation tree."""

    rng = random.Random(seed)
    return _derive(rng, dim, form, depth, product)


def _derive(rng: random.Random, dim: int, form: QuadraticForm, depth: int, product: ProductFn) -> Multivector:
    choice = rng.random()
    if depth == 0 or choice < 0.25:
        if dim == 0 or rng.random() < 0.5:
            return algebra_map(random_rational(rng), dim)
        return iota(random_vector(rng, dim))
    left = _derive(rng, dim, form, depth - 1, product)
    right = _derive(rng, dim, form, depth - 1, product)
    if choice < 0.625:
        return left + right
    return product(form, left, right)
