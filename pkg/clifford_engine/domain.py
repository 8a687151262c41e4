from __future__ import annotations

from enum import Enum

MAX_DIMENSION = 63
MAX_TABLE_DIMENSION = 8


class EngineKind(str, Enum):
    """Product engine requested for an algebra context."""

    AUTO = "auto"
    ORACLE = "oracle"
    FAST = "fast"


class OutputFormat(str, Enum):
    """Rendering modes supported by the command-line evaluator."""

    HUMAN = "human"
    JSON = "json"


class PresetName(str, Enum):
    """Stable identifiers of the bundled model algebras."""

    COMPLEX = "complex"
    QUATERNION = "quaternion"
    CGA2 = "cga2"
    CGA3 = "cga3"
    PGA3 = "pga3"
    EUCLID2 = "euclid2"
    EUCLID3 = "euclid3"


class CliffordError(ValueError):
    """Base class for every user-facing error raised by the engine."""


class DimensionMismatchError(CliffordError):
    """Raised when operands live in spaces of different dimension."""

    def __init__(self, expected: int, actual: int, *, what: str = "operand") -> None:
        super().__init__(f"dimension mismatch: expected {expected}, got {actual} for {what}")
        self.expected = expected
        self.actual = actual


class DimensionTooLargeError(CliffordError):
    """Raised when a blade index set would not fit the supported bit width."""


class ScalarParseError(CliffordError):
    """Raised when a value cannot be read as an exact rational."""


class ScalarContractError(CliffordError):
    """Raised when a scalar type lacks an operation the caller requires."""


class AsymmetricFormError(CliffordError):
    """Raised when a bilinear matrix is not square and symmetric."""


class NonDiagonalFormError(CliffordError):
    """Raised when a diagonal-only routine receives a general form."""


class MetricMismatchError(CliffordError):
    """Raised when two values of the same dimension carry different quadratic forms."""


class NotInvertibleError(CliffordError):
    """Raised when an element has no inverse under the geometric product."""


class LiftRelationError(CliffordError):
    """Raised when candidate basis images violate the Clifford relation."""

    def __init__(self, relation: str, lhs: object, rhs: object) -> None:
        super().__init__(f"basis relation violated: {relation} (got {lhs}, expected {rhs})")
        self.relation = relation
        self.lhs = lhs
        self.rhs = rhs


class UnknownPresetError(CliffordError):
    """Raised for preset names outside the registry."""

    def __init__(self, name: str) -> None:
        valid = ", ".join(preset.value for preset in PresetName)
        super().__init__(f"unknown preset {name!r}; valid presets: {valid}")
        self.name = name


class ParseError(CliffordError):
    """Syntax error with the offending position and the tokens that would fit."""

    def __init__(self, message: str, position: int, expected: frozenset[str] = frozenset()) -> None:
        detail = f"{message} at position {position}"
        if expected:
            detail += f"; expected one of: {', '.join(sorted(expected))}"
        super().__init__(detail)
        self.position = position
        self.expected = expected


class UnknownTokenError(CliffordError):
    """Raised when an identifier is not a basis token of the active algebra."""

    def __init__(self, token: str, algebra: str, position: int) -> None:
        super().__init__(f"unknown basis token {token!r} at position {position} in algebra {algebra}")
        self.token = token
        self.algebra = algebra
        self.position = position


class ArityError(CliffordError):
    """Raised when a function is called with the wrong number of arguments."""


class EvaluationError(CliffordError):
    """Raised when an expression is well-formed but cannot be evaluated."""


class ConfigurationError(CliffordError):
    """Raised for invalid environment or command-line configuration."""


class TableTooLargeError(CliffordError):
    """Raised when a Cayley table is requested for too many basis vectors."""


class EngineAssertionError(RuntimeError):
    """Internal invariant violation; indicates an engine bug, never user input."""
