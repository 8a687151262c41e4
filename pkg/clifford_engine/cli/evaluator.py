from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from clifford_engine.algebra.multivector import Multivector, grade_project
from clifford_engine.cli.parser import Basis, BasisTokens, BinOp, Call, Expr, Literal, Neg
from clifford_engine.domain import ArityError, EngineAssertionError, EvaluationError, NotInvertibleError
from clifford_engine.engine.dispatch import GeometricAlgebra
from clifford_engine.engine.oracle import product_general
from clifford_engine.forms.quadratic import FieldVector
from clifford_engine.models.conformal import cga_embed, up
from clifford_engine.structure.conjugations import clifford_conjugate, grades_z2, involute, reverse

_UNARY: dict[str, Callable[[Multivector], Multivector]] = {
    "rev": reverse,
    "invol": involute,
    "conj": clifford_conjugate,
    "even": lambda value: grades_z2(value).even,
    "odd": lambda value: grades_z2(value).odd,
}


@dataclass(frozen=True, slots=True)
class Evaluator:
    """Reduces parsed expressions to exact multivectors in one algebra."""

    algebra: GeometricAlgebra

    @property
    def tokens(self) -> BasisTokens:
        return BasisTokens(self.algebra.labels, self.algebra.name)

    def evaluate(self, expr: Expr) -> Multivector:
        match expr:
            case Literal(value=value):
                return self.algebra.scalar(value)
            case Basis(name=name, position=position, axes=axes):
                if axes is None:
                    axes = self.tokens.resolve(name, position)
                result = self.algebra.scalar(1)
                for axis in axes:
                    result = self.algebra.mul(result, self.algebra.basis_vector(axis))
                return result
            case Neg(operand=operand):
                return -self.evaluate(operand)
            case BinOp(op=op, left=left, right=right):
                return self._binary(op, self.evaluate(left), self.evaluate(right))
            case Call(name=name, args=args, position=position):
                return self._call(name, [self.evaluate(arg) for arg in args], position)
        raise EvaluationError(f"cannot evaluate {expr!r}")

    def _binary(self, op: str, left: Multivector, right: Multivector) -> Multivector:
        if op == "+":
            return left + right
        if op == "-":
            return left - right
        if op == "*":
            return self.algebra.mul(left, right)
        if op == "^":
            return self.algebra.wedge(left, right)
        if op == "|":
            return self.algebra.left_contraction(left, right)
        raise EvaluationError(f"unknown operator {op!r}")

    def _call(self, name: str, args: list[Multivector], position: int) -> Multivector:
        if name in _UNARY:
            _check_arity(name, args, 1, position)
            return _UNARY[name](args[0])
        if name == "inv":
            _check_arity(name, args, 1, position)
            return self.versor_inverse(args[0])
        if name == "grade":
            _check_arity(name, args, 2, position)
            return grade_project(args[0], _as_grade(args[1], position))
        if name == "sp":
            _check_arity(name, args, 2, position)
            return self.algebra.scalar_product(args[0], args[1])
        if name == "up":
            return self._up(args, position)
        raise EvaluationError(f"unknown function {name!r} at position {position}")

    def versor_inverse(self, value: Multivector) -> Multivector:
        """rev(x) / (x·rev(x)) when x·rev(x) is a nonzero scalar.

        The result is checked with the rewriting engine, whatever engine the
        algebra uses, so a disagreement surfaces as an `EngineAssertionError`.
        """

        reversed_value = reverse(value)
        norm = self.algebra.mul(value, reversed_value)
        if norm.is_zero() or not norm.is_scalar():
            raise NotInvertibleError(
                f"{value.to_text(self.algebra.labels)} is not invertible: "
                f"x*rev(x) = {norm.to_text(self.algebra.labels)} is not a nonzero scalar"
            )
        inverse = reversed_value.scale(1 / norm.scalar_part())
        check = product_general(self.algebra.form, value, inverse)
        if check != self.algebra.scalar(1):
            raise EngineAssertionError(
                f"x*inv(x) = {check.to_text(self.algebra.labels)} under the rewriting engine, expected 1"
            )
        return inverse

    def _up(self, args: list[Multivector], position: int) -> Multivector:
        dim = self.algebra.conformal_dim
        if dim is None:
            raise EvaluationError(f"up() at position {position} needs a conformal algebra; {self.algebra.name} is not one")
        _check_arity("up", args, dim, position)
        coords = [_as_scalar(arg, "up", position) for arg in args]
        return cga_embed(up(FieldVector(tuple(coords))))


def _check_arity(name: str, args: list[Multivector], expected: int, position: int) -> None:
    if len(args) != expected:
        raise ArityError(f"{name}() at position {position} takes {expected} argument(s), got {len(args)}")


def _as_scalar(value: Multivector, name: str, position: int) -> Any:
    if not value.is_scalar():
        raise EvaluationError(f"{name}() at position {position} needs scalar arguments")
    return value.scalar_part()


def _as_grade(value: Multivector, position: int) -> int:
    k = _as_scalar(value, "grade", position)
    if k.denominator != 1 or k < 0:
        raise EvaluationError(f"grade() at position {position} needs a non-negative integer grade")
    return int(k)
