from __future__ import annotations

from clifford_engine.forms.quadratic import (
    FieldVector,
    QuadraticForm,
    Signature,
    is_definite_diagonal,
    polar_eval,
    quadratic_eval,
    signature_form,
)
from clifford_engine.forms.scalars import Scalar, format_rational, parse_rational, to_scalar

__all__ = [
    "FieldVector",
    "QuadraticForm",
    "Scalar",
    "Signature",
    "format_rational",
    "is_definite_diagonal",
    "parse_rational",
    "polar_eval",
    "quadratic_eval",
    "signature_form",
    "to_scalar",
]
