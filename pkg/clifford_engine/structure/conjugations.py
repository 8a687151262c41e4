from __future__ import annotations

from typing import NamedTuple

from clifford_engine.algebra.multivector import Multivector


class Z2Decomposition(NamedTuple):
    even: Multivector
    odd: Multivector


def _involute_sign(k: int) -> int:
    return -1 if k & 1 else 1


def _reverse_sign(k: int) -> int:
    return -1 if (k * (k - 1) // 2) & 1 else 1


def _conjugate_sign(k: int) -> int:
    return -1 if (k * (k + 1) // 2) & 1 else 1


def involute(a: Multivector) -> Multivector:
    """Grade involution: (-1)^k on grade k."""

    return a.map_by_grade(_involute_sign)


def reverse(a: Multivector) -> Multivector:
    """Reversion: (-1)^(k(k-1)/2) on grade k."""

    return a.map_by_grade(_reverse_sign)


def clifford_conjugate(a: Multivector) -> Multivector:
    return a.map_by_grade(_conjugate_sign)


def grades_z2(a: Multivector) -> Z2Decomposition:
    even = tuple((blade, coef) for blade, coef in a.terms if blade.bit_count() % 2 == 0)
    odd = tuple((blade, coef) for blade, coef in a.terms if blade.bit_count() % 2 == 1)
    return Z2Decomposition(Multivector(a.dim, even), Multivector(a.dim, odd))
