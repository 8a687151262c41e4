from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Iterator

from clifford_engine.domain import (
    AsymmetricFormError,
    ConfigurationError,
    DimensionMismatchError,
    NonDiagonalFormError,
)
from clifford_engine.forms.scalars import ONE, ZERO, ring_mul, ring_sum, to_rational, to_scalar


@dataclass(frozen=True, slots=True)
class FieldVector:
    """Coordinates of a vector in V with respect to the standard basis."""

    coords: tuple[Any, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(to_scalar(c) for c in self.coords))

    @classmethod
    def of(cls, *coords: object) -> FieldVector:
        return cls(tuple(coords))

    @classmethod
    def zero(cls, dim: int) -> FieldVector:
        return cls((ZERO,) * dim)

    @classmethod
    def basis(cls, dim: int, axis: int) -> FieldVector:
        """The basis vector e_{axis+1}."""

        if not 0 <= axis < dim:
            raise IndexError(f"axis {axis} outside dimension {dim}")
        return cls(tuple(ONE if i == axis else ZERO for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[Any]:
        return iter(self.coords)

    def __getitem__(self, index: int) -> Any:
        return self.coords[index]

    def __add__(self, other: FieldVector) -> FieldVector:
        _check_dim(self.dim, other.dim)
        return FieldVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: FieldVector) -> FieldVector:
        return self + (-other)

    def __neg__(self) -> FieldVector:
        return FieldVector(tuple(-a for a in self.coords))

    def scale(self, factor: object) -> FieldVector:
        c = to_scalar(factor)
        return FieldVector(tuple(ring_mul(c, a) for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)


@dataclass(frozen=True, slots=True)
class QuadraticForm:
    """Symmetric bilinear matrix B; Q(v) = vᵀBv."""

    matrix: tuple[tuple[Any, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(to_rational(entry) for entry in row) for row in self.matrix)
        size = len(rows)
        for index, row in enumerate(rows):
            if len(row) != size:
                raise AsymmetricFormError(f"row {index} has {len(row)} entries, expected {size}")
        for i in range(size):
            for j in range(i + 1, size):
                if rows[i][j] != rows[j][i]:
                    raise AsymmetricFormError(
                        f"matrix is not symmetric: B[{i}][{j}]={rows[i][j]} but B[{j}][{i}]={rows[j][i]}"
                    )
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def diagonal_of(cls, entries: Iterable[object]) -> QuadraticForm:
        values = [to_rational(entry) for entry in entries]
        size = len(values)
        return cls(tuple(tuple(values[i] if i == j else ZERO for j in range(size)) for i in range(size)))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def is_diagonal(self) -> bool:
        return all(
            self.matrix[i][j] == 0 for i in range(self.dim) for j in range(self.dim) if i != j
        )

    def diagonal(self) -> tuple[Any, ...]:
        return tuple(self.matrix[i][i] for i in range(self.dim))

    def basis_square(self, axis: int) -> Any:
        """Q(e_{axis+1})."""

        return self.matrix[axis][axis]

    def basis_polar(self, i: int, j: int) -> Any:
        """polar(e_{i+1}, e_{j+1}) = 2·B[i][j]."""

        return 2 * self.matrix[i][j]

    def bilinear(self, u: FieldVector, v: FieldVector) -> Any:
        _check_dim(self.dim, u.dim, what="left vector")
        _check_dim(self.dim, v.dim, what="right vector")
        return ring_sum(
            ring_mul(ring_mul(ui, row[j]), vj)
            for ui, row in zip(u.coords, self.matrix)
            if ui != 0
            for j, vj in enumerate(v.coords)
            if row[j] != 0
        )

    def __call__(self, v: FieldVector) -> Any:
        return quadratic_eval(self, v)


@dataclass(frozen=True, slots=True)
class Signature:
    """Counts of basis vectors squaring to +1, -1 and 0."""

    p: int
    q: int = 0
    r: int = 0

    def __post_init__(self) -> None:
        if min(self.p, self.q, self.r) < 0:
            raise ConfigurationError(f"signature counts must be non-negative: {self}")

    @classmethod
    def parse(cls, text: str) -> Signature:
        parts = [part.strip() for part in text.split(",")]
        if len(parts) != 3:
            raise ConfigurationError(f"signature must be 'p,q,r', got {text!r}")
        try:
            p, q, r = (int(part) for part in parts)
        except ValueError as exc:
            raise ConfigurationError(f"signature must be 'p,q,r', got {text!r}") from exc
        return cls(p, q, r)

    @property
    def dim(self) -> int:
        return self.p + self.q + self.r

    def label(self) -> str:
        return f"G({self.p},{self.q},{self.r})"


def quadratic_eval(form: QuadraticForm, v: FieldVector) -> Any:
    """Returns vᵀ B v."""

    return form.bilinear(v, v)


def polar_eval(form: QuadraticForm, u: FieldVector, v: FieldVector) -> Any:
    """Q(u+v) − Q(u) − Q(v), which equals 2·uᵀBv."""

    _check_dim(u.dim, v.dim, what="polar operands")
    return ring_sum((quadratic_eval(form, u + v), -quadratic_eval(form, u), -quadratic_eval(form, v)))


def signature_form(signature: Signature) -> QuadraticForm:
    entries = [ONE] * signature.p + [-ONE] * signature.q + [ZERO] * signature.r
    return QuadraticForm.diagonal_of(entries)


def is_definite_diagonal(form: QuadraticForm) -> bool:
    """Sufficient (not necessary) anisotropy check: all diagonal entries share a strict sign.

    The empty form counts as definite since only the zero vector exists.
    """

    if not form.is_diagonal():
        raise NonDiagonalFormError("definiteness check needs a diagonal form; diagonalize first")
    entries = form.diagonal()
    return all(d > 0 for d in entries) or all(d < 0 for d in entries)


def _check_dim(expected: int, actual: int, *, what: str = "vector") -> None:
    if expected != actual:
        raise DimensionMismatchError(expected, actual, what=what)
