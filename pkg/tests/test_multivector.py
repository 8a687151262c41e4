from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from clifford_engine.algebra.blades import (
    all_blades,
    blade_axes,
    blade_from_axes,
    blade_name,
    grade,
    reorder_sign,
)
from clifford_engine.algebra.multivector import (
    Multivector,
    algebra_map,
    format_multivector,
    grade_project,
    iota,
    max_grade,
    mv_sum,
    validate_canonical,
)
from clifford_engine.domain import DimensionMismatchError, DimensionTooLargeError
from clifford_engine.engine.fast import geometric_product
from clifford_engine.forms.quadratic import FieldVector, QuadraticForm
from clifford_engine.structure.generators import random_multivector
from tests.strategies import rationals, seeds, vectors

FORM3 = QuadraticForm.diagonal_of([1, 1, 1])


def sample(seed: int) -> Multivector:
    return random_multivector(seed, 3, FORM3, 3)


class TestBlades:
    def test_all_blades_are_ordered_by_grade_then_bits(self):
        assert all_blades(3) == (0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111)

    def test_axes_round_trip(self):
        assert blade_axes(0b1011) == (0, 1, 3)
        assert blade_from_axes((3, 0, 1)) == 0b1011
        assert grade(0b1011) == 3

    def test_reorder_sign(self):
        # e2 * e1 needs one swap
        assert reorder_sign(0b10, 0b01) == -1
        assert reorder_sign(0b01, 0b10) == 1
        # e2e3 * e1 needs two swaps
        assert reorder_sign(0b110, 0b001) == 1

    def test_blade_names(self):
        assert blade_name(0) == "1"
        assert blade_name(0b101) == "e1e3"
        assert blade_name(0b1100, ("e1", "e2", "n0", "ni")) == "n0ni"

    def test_axis_limit(self):
        with pytest.raises(DimensionTooLargeError):
            blade_from_axes([63])
        with pytest.raises(DimensionTooLargeError):
            Multivector.zero(64)


class TestCanonicalForm:
    def test_zero_coefficients_are_dropped_and_terms_merged(self):
        value = Multivector(2, ((0b11, 2), (0b01, 1), (0b11, -2), (0, 0)))
        assert value.terms == ((0b01, Fraction(1)),)

    def test_terms_are_sorted(self):
        value = Multivector.from_mapping(3, {0b111: 1, 0b100: 2, 0b011: 3, 0: 4})
        assert value.blades() == (0, 0b100, 0b011, 0b111)
        validate_canonical(value)

    def test_blade_outside_dimension(self):
        with pytest.raises(DimensionTooLargeError):
            Multivector.blade(2, 0b100)

    def test_dimension_mismatch_on_add(self):
        with pytest.raises(DimensionMismatchError):
            Multivector.blade(2, 1) + Multivector.blade(3, 1)

    @given(seeds)
    def test_random_values_are_canonical(self, seed):
        validate_canonical(sample(seed))


class TestModuleLaws:
    @given(seeds, seeds, seeds)
    def test_addition_is_associative_and_commutative(self, s1, s2, s3):
        a, b, c = sample(s1), sample(s2), sample(s3)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a

    @given(seeds)
    def test_additive_identity_and_inverse(self, seed):
        a = sample(seed)
        assert a + Multivector.zero(3) == a
        assert (a - a).is_zero()

    @given(seeds, seeds, rationals, rationals)
    def test_scaling_distributes(self, s1, s2, r, s):
        a, b = sample(s1), sample(s2)
        assert (a + b).scale(r) == a.scale(r) + b.scale(r)
        assert a.scale(r + s) == a.scale(r) + a.scale(s)
        assert a.scale(r * s) == a.scale(s).scale(r)

    @given(vectors(3), vectors(3), rationals)
    def test_iota_is_linear(self, u, v, r):
        assert iota(u + v) == iota(u) + iota(v)
        assert iota(v.scale(r)) == iota(v).scale(r)

    def test_algebra_map_is_additive(self):
        assert algebra_map(2, 3) + algebra_map(Fraction(1, 2), 3) == algebra_map(Fraction(5, 2), 3)


class TestGrades:
    def test_grade_project_and_max_grade(self):
        value = Multivector.from_mapping(3, {0: 1, 0b001: 2, 0b011: 3})
        assert grade_project(value, 1) == Multivector.blade(3, 0b001, 2)
        assert grade_project(value, 3).is_zero()
        assert max_grade(value) == 2
        assert max_grade(Multivector.zero(3)) is None

    @given(seeds)
    def test_grade_projections_sum_back(self, seed):
        a = sample(seed)
        assert mv_sum(3, (grade_project(a, k) for k in range(4))) == a

    @given(st.lists(vectors(3), max_size=4))
    def test_filtration_of_vector_products(self, factors):
        product = algebra_map(1, 3)
        for factor in factors:
            product = geometric_product(FORM3, product, iota(factor))
        top = max_grade(product)
        assert top is None or top <= len(factors)


class TestFormatting:
    def test_human_rendering(self):
        value = Multivector.from_mapping(2, {0: 1, 0b11: Fraction(-3, 2)})
        assert format_multivector(value) == "1 - 3/2 e1e2"

    def test_unit_coefficients_are_omitted(self):
        value = Multivector.from_mapping(2, {0b01: -1, 0b10: 1})
        assert str(value) == "-e1 + e2"

    def test_scalar_one_keeps_its_digit(self):
        assert str(algebra_map(-1, 2)) == "-1"

    def test_zero(self):
        assert str(Multivector.zero(2)) == "0"

    def test_custom_labels(self):
        value = iota(FieldVector.of(0, 0, 1, Fraction(1, 2)))
        assert value.to_text(("e1", "e2", "n0", "ni")) == "n0 + 1/2 ni"
