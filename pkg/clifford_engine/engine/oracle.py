"""Clifford algebra as a quotient of the tensor algebra, computed by rewriting.

Basis words are reduced with the two rules derived from the Clifford relation

    e_i e_i -> Q(e_i)
    e_j e_i -> polar(e_i, e_j) - e_i e_j        (j > i)

applied at the leftmost redex. Each step shortens the word or removes one
inversion, so rewriting terminates on strictly increasing, square-free words,
which are exactly the canonical blades.
"""

from __future__ import annotations

import heapq
import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from clifford_engine.algebra.blades import Blade, blade_axes, blade_from_axes
from clifford_engine.algebra.multivector import Multivector
from clifford_engine.domain import DimensionMismatchError
from clifford_engine.forms.quadratic import QuadraticForm
from clifford_engine.forms.scalars import ONE, ring_mul, to_scalar

logger = logging.getLogger(__name__)

Word = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class TensorElement:
    """Formal sum of basis words; the empty word is the unit."""

    dim: int
    terms: tuple[tuple[Word, Any], ...] = ()

    def __post_init__(self) -> None:
        merged: dict[Word, Any] = {}
        for word, coef in self.terms:
            word = tuple(word)
            for axis in word:
                if not 0 <= axis < self.dim:
                    raise DimensionMismatchError(self.dim, axis + 1, what="tensor word letter")
            value = to_scalar(coef)
            if value == 0:
                continue
            merged[word] = merged[word] + value if word in merged else value
        canonical = tuple(
            (word, merged[word]) for word in sorted(merged, key=lambda w: (len(w), w)) if merged[word] != 0
        )
        object.__setattr__(self, "terms", canonical)

    @classmethod
    def word(cls, dim: int, word: Word, coef: object = 1) -> TensorElement:
        return cls(dim, ((tuple(word), coef),))

    @classmethod
    def unit(cls, dim: int) -> TensorElement:
        return cls(dim, (((), ONE),))

    @classmethod
    def from_multivector(cls, a: Multivector) -> TensorElement:
        """Canonical blades are already increasing words."""

        return cls(a.dim, tuple((blade_axes(blade), coef) for blade, coef in a.terms))

    def __add__(self, other: TensorElement) -> TensorElement:
        if self.dim != other.dim:
            raise DimensionMismatchError(self.dim, other.dim, what="tensor element")
        return TensorElement(self.dim, self.terms + other.terms)

    def __mul__(self, other: TensorElement) -> TensorElement:
        return tensor_mul(self, other)


def tensor_mul(a: TensorElement, b: TensorElement) -> TensorElement:
    """Bilinear extension of word concatenation."""

    if a.dim != b.dim:
        raise DimensionMismatchError(a.dim, b.dim, what="tensor element")
    return TensorElement(
        a.dim,
        tuple((left + right, ring_mul(ca, cb)) for left, ca in a.terms for right, cb in b.terms),
    )


def _find_redex(word: Word) -> int | None:
    for index in range(len(word) - 1):
        if word[index] >= word[index + 1]:
            return index
    return None


def _all_redexes(word: Word) -> list[int]:
    return [index for index in range(len(word) - 1) if word[index] >= word[index + 1]]


def _inversions(word: Word) -> int:
    return sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])


def _pair_inversions(word: Word, index: int) -> int:
    """Inversions of ``word`` that involve position ``index`` or ``index + 1``."""

    left, right = word[index], word[index + 1]
    count = int(left > right)
    for letter in word[:index]:
        count += (letter > left) + (letter > right)
    for letter in word[index + 2 :]:
        count += (left > letter) + (right > letter)
    return count


def _rewrite_at(form: QuadraticForm, word: Word, index: int) -> list[tuple[Word, Any]]:
    left, right = word[index], word[index + 1]
    prefix, suffix = word[:index], word[index + 2 :]
    shorter = prefix + suffix
    if left == right:
        return [(shorter, form.basis_square(left))]
    # left > right: e_l e_r = polar(e_r, e_l) - e_r e_l
    results: list[tuple[Word, Any]] = [(prefix + (right, left) + suffix, -ONE)]
    polar = form.basis_polar(right, left)
    if polar != 0:
        results.append((shorter, polar))
    return results


@lru_cache(maxsize=65536)
def _normalize_word(form: QuadraticForm, word: Word) -> tuple[tuple[Blade, Any], ...]:
    """Leftmost-redex normal form of a single word, computed with an explicit worklist.

    Every rewrite either drops two letters or removes exactly one inversion,
    so popping words by (longest, most inversions) first guarantees a word is
    rewritten only after all of its predecessors have contributed to it.
    """

    pending: dict[Word, Any] = {word: ONE}
    queue: list[tuple[int, int, Word]] = [(-len(word), -_inversions(word), word)]
    totals: dict[Blade, Any] = {}
    steps = 0
    while queue:
        _, negative_inversions, current = heapq.heappop(queue)
        coef = pending.pop(current)
        if coef == 0:
            continue
        index = _find_redex(current)
        if index is None:
            blade = blade_from_axes(current)
            totals[blade] = totals[blade] + coef if blade in totals else coef
            continue
        steps += 1
        inversions = -negative_inversions
        for rewritten, factor in _rewrite_at(form, current, index):
            if factor == 0:
                continue
            value = ring_mul(coef, factor)
            if rewritten in pending:
                pending[rewritten] = pending[rewritten] + value
                continue
            if len(rewritten) == len(current):
                rewritten_inversions = inversions - 1
            else:
                rewritten_inversions = inversions - _pair_inversions(current, index)
            pending[rewritten] = value
            heapq.heappush(queue, (-len(rewritten), -rewritten_inversions, rewritten))
    if steps:
        logger.debug("normalized a word of length %d in %d rewrite steps", len(word), steps)
    return tuple((blade, value) for blade, value in totals.items() if value != 0)


def normalize(form: QuadraticForm, element: TensorElement) -> Multivector:
    """Reduces a tensor element to its canonical blade combination."""

    if element.dim != form.dim:
        raise DimensionMismatchError(form.dim, element.dim, what="tensor element")
    terms: list[tuple[Blade, Any]] = []
    for word, coef in element.terms:
        for blade, inner in _normalize_word(form, word):
            terms.append((blade, ring_mul(coef, inner)))
    return Multivector(form.dim, tuple(terms))


def product_general(form: QuadraticForm, a: Multivector, b: Multivector) -> Multivector:
    """Geometric product for any symmetric form via tensor concatenation and rewriting."""

    for operand in (a, b):
        if operand.dim != form.dim:
            raise DimensionMismatchError(form.dim, operand.dim, what="product operand")
    terms: list[tuple[Blade, Any]] = []
    for blade_a, ca in a.terms:
        word_a = blade_axes(blade_a)
        for blade_b, cb in b.terms:
            scale = ring_mul(ca, cb)
            for blade, inner in _normalize_word(form, word_a + blade_axes(blade_b)):
                terms.append((blade, ring_mul(scale, inner)))
    return Multivector(form.dim, tuple(terms))


def normalize_randomized(form: QuadraticForm, element: TensorElement, rng: random.Random) -> Multivector:
    """Rewrites at a random redex of a random pending word until nothing is reducible."""

    pending: list[tuple[Word, Any]] = list(element.terms)
    finished: list[tuple[Blade, Any]] = []
    steps = 0
    while pending:
        word, coef = pending.pop(rng.randrange(len(pending)))
        redexes = _all_redexes(word)
        if not redexes:
            finished.append((blade_from_axes(word), coef))
            continue
        steps += 1
        for rewritten, factor in _rewrite_at(form, word, rng.choice(redexes)):
            if factor != 0:
                pending.append((rewritten, ring_mul(coef, factor)))
    logger.debug("randomized normalization finished after %d rewrite steps", steps)
    return Multivector(form.dim, tuple(finished))


def confluence_check(form: QuadraticForm, element: TensorElement, trials: int, *, seed: int = 0) -> bool:
    """Checks that randomized rewrite orders all reach the deterministic normal form."""

    expected = normalize(form, element)
    rng = random.Random(seed)
    for trial in range(trials):
        candidate = normalize_randomized(form, element, rng)
        if candidate != expected:
            logger.warning("rewrite order %d reached %s instead of %s", trial, candidate, expected)
            return False
    return True
