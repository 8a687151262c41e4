from __future__ import annotations

from itertools import permutations
from math import factorial
from typing import Any, Sequence

from clifford_engine.algebra.multivector import Multivector, algebra_map, iota, mv_sum
from clifford_engine.domain import DimensionMismatchError
from clifford_engine.engine.fast import ProductFn, geometric_product
from clifford_engine.forms.quadratic import FieldVector, QuadraticForm
from clifford_engine.forms.scalars import ONE, require_division


def _permutation_sign(order: Sequence[int]) -> int:
    inversions = sum(
        1 for i in range(len(order)) for j in range(i + 1, len(order)) if order[i] > order[j]
    )
    return -1 if inversions & 1 else 1


def iota_wedge(
    form: QuadraticForm, vectors: Sequence[FieldVector], *, product: ProductFn = geometric_product
) -> Multivector:
    """(1/n!) Σ_σ sign(σ) ι(x_σ(1))…ι(x_σ(n)), the alternatization of the n-fold product."""

    for vector in vectors:
        if vector.dim != form.dim:
            raise DimensionMismatchError(form.dim, vector.dim, what="wedge factor")
    count = len(vectors)
    if count == 0:
        return algebra_map(ONE, form.dim)
    require_division(vectors[0].coords[0] if form.dim else ONE, operation="iota_wedge")
    embedded = [iota(vector) for vector in vectors]
    terms: list[Multivector] = []
    for order in permutations(range(count)):
        term = algebra_map(_permutation_sign(order), form.dim)
        for index in order:
            term = product(form, term, embedded[index])
        terms.append(term)
    return mv_sum(form.dim, terms).scale(ONE / factorial(count))


def vector_rank(vectors: Sequence[FieldVector]) -> int:
    """Rank by exact Gaussian elimination."""

    rows: list[list[Any]] = [list(vector.coords) for vector in vectors]
    if not rows:
        return 0
    width = len(rows[0])
    rank = 0
    for column in range(width):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][column] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][column]
        for r in range(len(rows)):
            if r != rank and rows[r][column] != 0:
                factor = rows[r][column] / lead
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank
