from __future__ import annotations

import json

from clifford_engine.algebra.blades import blade_name
from clifford_engine.algebra.multivector import Multivector, format_multivector
from clifford_engine.domain import OutputFormat
from clifford_engine.forms.scalars import format_rational
from clifford_engine.rendering.environment import get_template_environment
from clifford_engine.services.models import CayleyReport, EvaluationReport

TABLE_TEMPLATE = "cayley_table.j2"
TABLE_CORNER = "*"


def evaluation_report(value: Multivector, labels: tuple[str, ...]) -> EvaluationReport:
    return EvaluationReport(
        blades={blade_name(blade, labels): format_rational(coef) for blade, coef in value.terms}
    )


def render_value(value: Multivector, labels: tuple[str, ...], output: OutputFormat) -> str:
    if output == OutputFormat.JSON:
        return json.dumps(evaluation_report(value, labels).model_dump())
    return format_multivector(value, labels)


def render_table(
    header: list[Multivector], rows: list[list[Multivector]], labels: tuple[str, ...], output: OutputFormat
) -> str:
    names = [format_multivector(blade, labels) for blade in header]
    if output == OutputFormat.JSON:
        report = CayleyReport(
            header=names,
            rows=[[evaluation_report(entry, labels).blades for entry in row] for row in rows],
        )
        return json.dumps(report.model_dump())
    template = get_template_environment().get_template(TABLE_TEMPLATE)
    rendered = template.render(
        corner=TABLE_CORNER,
        separator="\t",
        header=names,
        rows=[
            {"label": name, "entries": [format_multivector(entry, labels) for entry in row]}
            for name, row in zip(names, rows)
        ],
    )
    return rendered.rstrip("\n")
