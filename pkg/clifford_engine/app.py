from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from clifford_engine.algebra.blades import all_blades
from clifford_engine.algebra.multivector import Multivector
from clifford_engine.cli.evaluator import Evaluator
from clifford_engine.cli.parser import parse
from clifford_engine.domain import ConfigurationError, EngineKind, OutputFormat
from clifford_engine.engine.dispatch import GeometricAlgebra
from clifford_engine.forms.quadratic import Signature, signature_form
from clifford_engine.models.presets import get_preset
from clifford_engine.rendering.formatters import render_table, render_value
from clifford_engine.services.persistence import MetricRepository


@dataclass(frozen=True, slots=True)
class AlgebraSession:
    """Façade tying one algebra context to parsing, evaluation and rendering."""

    algebra: GeometricAlgebra

    @property
    def evaluator(self) -> Evaluator:
        return Evaluator(self.algebra)

    def evaluate(self, source: str) -> Multivector:
        evaluator = self.evaluator
        return evaluator.evaluate(parse(source, evaluator.tokens))

    def render(self, source: str, output: OutputFormat = OutputFormat.HUMAN) -> str:
        return render_value(self.evaluate(source), self.algebra.labels, output)

    def cayley_table(self, output: OutputFormat = OutputFormat.HUMAN) -> str:
        rows = self.algebra.cayley_table()
        header = [Multivector.blade(self.algebra.dim, blade) for blade in all_blades(self.algebra.dim)]
        return render_table(header, rows, self.algebra.labels, output)

    @classmethod
    def from_signature(cls, text: str, *, engine: EngineKind = EngineKind.AUTO) -> AlgebraSession:
        signature = Signature.parse(text)
        return cls(GeometricAlgebra(form=signature_form(signature), engine=engine, name=signature.label()))

    @classmethod
    def from_metric_file(cls, path: Path, *, engine: EngineKind = EngineKind.AUTO) -> AlgebraSession:
        form = MetricRepository().load(path)
        return cls(GeometricAlgebra(form=form, engine=engine, name=path.name))

    @classmethod
    def from_preset(cls, name: str, *, engine: EngineKind = EngineKind.AUTO) -> AlgebraSession:
        return cls(get_preset(name).build_algebra(engine))

    @classmethod
    def from_options(
        cls,
        *,
        signature: str | None = None,
        metric: Path | None = None,
        preset: str | None = None,
        engine: EngineKind = EngineKind.AUTO,
    ) -> AlgebraSession:
        """Exactly one of signature, metric file or preset selects the algebra."""

        chosen = [option for option in (signature, metric, preset) if option is not None]
        if len(chosen) != 1:
            raise ConfigurationError("choose exactly one of --signature, --metric, --preset")
        if signature is not None:
            return cls.from_signature(signature, engine=engine)
        if metric is not None:
            return cls.from_metric_file(metric, engine=engine)
        assert preset is not None
        return cls.from_preset(preset, engine=engine)
