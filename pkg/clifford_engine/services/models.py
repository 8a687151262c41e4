from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from clifford_engine.domain import ScalarParseError
from clifford_engine.forms.quadratic import QuadraticForm
from clifford_engine.forms.scalars import format_rational, parse_rational


class MetricDocument(BaseModel):
    """On-disk bilinear matrix: ``{"dim": 2, "matrix": [["1", "0"], ["0", "-1/2"]]}``."""

    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    dim: int = Field(ge=0)
    matrix: list[list[str]] = Field(default_factory=list)

    @field_validator("matrix")
    @classmethod
    def _entries_are_rational(cls, rows: list[list[str]]) -> list[list[str]]:
        for row in rows:
            for entry in row:
                try:
                    parse_rational(entry)
                except ScalarParseError as exc:
                    raise ValueError(str(exc)) from exc
        return rows

    @model_validator(mode="after")
    def _square_and_symmetric(self) -> MetricDocument:
        if len(self.matrix) != self.dim or any(len(row) != self.dim for row in self.matrix):
            raise ValueError(f"matrix must be {self.dim}x{self.dim}")
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if parse_rational(self.matrix[i][j]) != parse_rational(self.matrix[j][i]):
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")
        return self

    def to_form(self) -> QuadraticForm:
        return QuadraticForm(tuple(tuple(parse_rational(entry) for entry in row) for row in self.matrix))

    @classmethod
    def from_form(cls, form: QuadraticForm) -> MetricDocument:
        return cls(
            dim=form.dim,
            matrix=[[format_rational(entry) for entry in row] for row in form.matrix],
        )


class EvaluationReport(BaseModel):
    """Machine-readable evaluation result, blades in (grade, bit pattern) order."""

    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    blades: dict[str, str] = Field(default_factory=dict)


class CayleyReport(BaseModel):
    """Machine-readable Cayley table."""

    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    header: list[str]
    rows: list[list[dict[str, str]]]
