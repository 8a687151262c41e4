"""Expression language: precedence climbing over a small token stream.

Loosest to tightest: ``+ -`` < ``* ^ |`` < unary minus < calls and
parentheses; binary operators associate to the left. A rational literal
written directly before a basis identifier is its coefficient (``3/2 e1e2``).
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Union

from clifford_engine.domain import ParseError, UnknownTokenError
from clifford_engine.forms.scalars import parse_rational

logger = logging.getLogger(__name__)

FUNCTIONS = frozenset({"rev", "invol", "conj", "grade", "even", "odd", "sp", "inv", "up"})

BINDING_POWER = {"+": 10, "-": 10, "*": 20, "^": 20, "|": 20}
UNARY_BINDING_POWER = 30

END = "end of input"
_OPERAND_START = frozenset({"number", "identifier", "(", "-"})

_TOKEN_PATTERN = re.compile(
    r"(?P<number>\d+(?:/\d+)?)|(?P<identifier>[A-Za-z_][A-Za-z0-9_]*)|(?P<symbol>[-+*^|(),])|(?P<space>\s+)"
)


class Token(NamedTuple):
    kind: str
    text: str
    position: int


@dataclass(frozen=True, slots=True)
class Literal:
    value: Fraction


@dataclass(frozen=True, slots=True)
class Basis:
    name: str
    position: int
    axes: tuple[int, ...] | None = None


@dataclass(frozen=True, slots=True)
class Neg:
    operand: Expr


@dataclass(frozen=True, slots=True)
class BinOp:
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True, slots=True)
class Call:
    name: str
    args: tuple[Expr, ...]
    position: int


Expr = Union[Literal, Basis, Neg, BinOp, Call]


@dataclass(frozen=True, slots=True)
class BasisTokens:
    """Token table of the active algebra."""

    labels: tuple[str, ...]
    algebra: str

    def resolve(self, name: str, position: int) -> tuple[int, ...]:
        """Splits an identifier into labels, longest match first."""

        ordered = sorted(range(len(self.labels)), key=lambda axis: -len(self.labels[axis]))
        axes: list[int] = []
        offset = 0
        while offset < len(name):
            for axis in ordered:
                if name.startswith(self.labels[axis], offset):
                    axes.append(axis)
                    offset += len(self.labels[axis])
                    break
            else:
                raise UnknownTokenError(name, self.algebra, position)
        return tuple(axes)


def tokenize(source: str) -> Iterator[Token]:
    position = 0
    while position < len(source):
        match = _TOKEN_PATTERN.match(source, position)
        if match is None:
            raise ParseError(f"unexpected character {source[position]!r}", position, _OPERAND_START)
        kind = match.lastgroup
        assert kind is not None
        if kind != "space":
            text = match.group()
            yield Token(text if kind == "symbol" else kind, text, position)
        position = match.end()
    yield Token(END, "", len(source))


class Parser:
    def __init__(self, source: str, tokens: BasisTokens | None = None) -> None:
        self._tokens = list(tokenize(source))
        self._index = 0
        self._basis = tokens

    @property
    def token(self) -> Token:
        return self._tokens[self._index]

    def peek(self, offset: int = 1) -> Token:
        return self._tokens[min(self._index + offset, len(self._tokens) - 1)]

    def advance(self) -> Token:
        token = self.token
        if self._index < len(self._tokens) - 1:
            self._index += 1
        return token

    def expect(self, kind: str) -> Token:
        if self.token.kind != kind:
            raise ParseError(self._describe_unexpected(), self.token.position, frozenset({kind}))
        return self.advance()

    def parse(self) -> Expr:
        tree = self.expression(0)
        if self.token.kind != END:
            raise ParseError(
                self._describe_unexpected(), self.token.position, frozenset(BINDING_POWER) | {END}
            )
        return tree

    def expression(self, min_bp: int) -> Expr:
        left = self.prefix()
        while self.token.kind in BINDING_POWER and BINDING_POWER[self.token.kind] > min_bp:
            op = self.advance()
            logger.debug("binary %s at %d", op.text, op.position)
            right = self.expression(BINDING_POWER[op.kind])
            left = BinOp(op.kind, left, right)
        return left

    def prefix(self) -> Expr:
        token = self.token
        if token.kind == "number":
            self.advance()
            literal = Literal(parse_rational(token.text))
            if self.token.kind == "identifier" and self.peek().kind != "(" and self.token.text not in FUNCTIONS:
                return BinOp("*", literal, self._basis_node(self.advance()))
            return literal
        if token.kind == "identifier":
            self.advance()
            if token.text in FUNCTIONS:
                return self._call(token)
            if self.token.kind == "(":
                raise ParseError(f"unknown function {token.text!r}", token.position, FUNCTIONS)
            return self._basis_node(token)
        if token.kind == "-":
            self.advance()
            return Neg(self.expression(UNARY_BINDING_POWER))
        if token.kind == "(":
            self.advance()
            inner = self.expression(0)
            self.expect(")")
            return inner
        raise ParseError(self._describe_unexpected(), token.position, _OPERAND_START)

    def _call(self, name: Token) -> Call:
        self.expect("(")
        args: list[Expr] = []
        if self.token.kind != ")":
            args.append(self.expression(0))
            while self.token.kind == ",":
                self.advance()
                args.append(self.expression(0))
        if self.token.kind != ")":
            raise ParseError(self._describe_unexpected(), self.token.position, frozenset({",", ")"}))
        self.advance()
        return Call(name.text, tuple(args), name.position)

    def _basis_node(self, token: Token) -> Basis:
        axes = self._basis.resolve(token.text, token.position) if self._basis else None
        return Basis(token.text, token.position, axes)

    def _describe_unexpected(self) -> str:
        token = self.token
        if token.kind == END:
            return "unexpected end of input"
        return f"unexpected token {token.text!r}"


def parse(source: str, tokens: BasisTokens | None = None) -> Expr:
    return Parser(source, tokens).parse()
