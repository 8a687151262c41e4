"""Bit-set blade products for diagonal metrics.

A·B lands on the symmetric difference A Δ B, signed by the reordering
parity and scaled by Q(e_i) for every shared factor e_i.
"""

from __future__ import annotations

import logging
from types import MappingProxyType
from typing import Any, Callable, Mapping

from clifford_engine.algebra.blades import Blade, all_blades, reorder_sign
from clifford_engine.algebra.multivector import Multivector, grade_project
from clifford_engine.domain import DimensionMismatchError, NonDiagonalFormError
from clifford_engine.engine.oracle import product_general
from clifford_engine.forms.quadratic import QuadraticForm
from clifford_engine.forms.scalars import ring_mul, to_scalar

logger = logging.getLogger(__name__)

ProductFn = Callable[[QuadraticForm, Multivector, Multivector], Multivector]
CayleyTable = Mapping[tuple[Blade, Blade], tuple[Any, Blade]]


def blade_product_diagonal(form: QuadraticForm, a: Blade, b: Blade) -> tuple[Any, Blade]:
    if not form.is_diagonal():
        raise NonDiagonalFormError("blade_product_diagonal needs a diagonal form; use product_general")
    if (a | b) >> form.dim:
        raise DimensionMismatchError(form.dim, max(a, b).bit_length(), what="blade")
    return _diagonal_blade_product(form.diagonal(), a, b)


def _diagonal_blade_product(diagonal: tuple[Any, ...], a: Blade, b: Blade) -> tuple[Any, Blade]:
    coef: Any = reorder_sign(a, b)
    shared = a & b
    axis = 0
    while shared:
        if shared & 1:
            coef = ring_mul(coef, diagonal[axis])
        shared >>= 1
        axis += 1
    return to_scalar(coef), a ^ b


def build_cayley_table(form: QuadraticForm) -> CayleyTable:
    """Memoized blade products of a diagonal form, frozen after construction."""

    if not form.is_diagonal():
        raise NonDiagonalFormError("cayley cache is only built for diagonal forms")
    diagonal = form.diagonal()
    blades = all_blades(form.dim)
    table = {(a, b): _diagonal_blade_product(diagonal, a, b) for a in blades for b in blades}
    logger.debug("built cayley cache with %d entries for dimension %d", len(table), form.dim)
    return MappingProxyType(table)


def diagonal_product(
    form: QuadraticForm, a: Multivector, b: Multivector, *, table: CayleyTable | None = None
) -> Multivector:
    if not form.is_diagonal():
        raise NonDiagonalFormError("fast engine needs a diagonal form; use the oracle engine")
    _check_operands(form, a, b)
    diagonal = form.diagonal()
    terms: list[tuple[Blade, Any]] = []
    for blade_a, ca in a.terms:
        for blade_b, cb in b.terms:
            if table is None:
                coef, blade = _diagonal_blade_product(diagonal, blade_a, blade_b)
            else:
                coef, blade = table[(blade_a, blade_b)]
            if coef != 0:
                terms.append((blade, ring_mul(ring_mul(ca, cb), coef)))
    return Multivector(form.dim, tuple(terms))


def geometric_product(form: QuadraticForm, a: Multivector, b: Multivector) -> Multivector:
    """Fast path on diagonal forms, quotient oracle otherwise."""

    if form.is_diagonal():
        return diagonal_product(form, a, b)
    return product_general(form, a, b)


def wedge_product(a: Multivector, b: Multivector) -> Multivector:
    """Metric-free exterior product."""

    if a.dim != b.dim:
        raise DimensionMismatchError(a.dim, b.dim, what="wedge operand")
    terms: list[tuple[Blade, Any]] = []
    for blade_a, ca in a.terms:
        for blade_b, cb in b.terms:
            if blade_a & blade_b:
                continue
            terms.append((blade_a | blade_b, ring_mul(reorder_sign(blade_a, blade_b), ring_mul(ca, cb))))
    return Multivector(a.dim, tuple(terms))


def left_contraction(
    form: QuadraticForm, a: Multivector, b: Multivector, *, product: ProductFn | None = None
) -> Multivector:
    """Σ ⟨⟨a⟩_i ⟨b⟩_j⟩_{j-i} over j ≥ i."""

    _check_operands(form, a, b)
    multiply = product or geometric_product
    parts: list[tuple[Blade, Any]] = []
    for grade_a in sorted({blade.bit_count() for blade in a.blades()}):
        part_a = grade_project(a, grade_a)
        for grade_b in sorted({blade.bit_count() for blade in b.blades()}):
            if grade_b < grade_a:
                continue
            full = multiply(form, part_a, grade_project(b, grade_b))
            parts.extend(grade_project(full, grade_b - grade_a).terms)
    return Multivector(form.dim, tuple(parts))


def scalar_product(
    form: QuadraticForm, a: Multivector, b: Multivector, *, product: ProductFn | None = None
) -> Multivector:
    multiply = product or geometric_product
    return grade_project(multiply(form, a, b), 0)


def _check_operands(form: QuadraticForm, a: Multivector, b: Multivector) -> None:
    for operand in (a, b):
        if operand.dim != form.dim:
            raise DimensionMismatchError(form.dim, operand.dim, what="product operand")
