"""Exact Clifford algebra engine: quotient-rewriting oracle plus a fast diagonal product."""

from __future__ import annotations

from clifford_engine.algebra import Multivector, algebra_map, grade_project, iota, max_grade
from clifford_engine.app import AlgebraSession
from clifford_engine.engine import GeometricAlgebra, geometric_product, product_general
from clifford_engine.forms import FieldVector, QuadraticForm, Signature, signature_form

__all__ = [
    "AlgebraSession",
    "FieldVector",
    "GeometricAlgebra",
    "Multivector",
    "QuadraticForm",
    "Signature",
    "algebra_map",
    "geometric_product",
    "grade_project",
    "iota",
    "max_grade",
    "product_general",
    "signature_form",
]
