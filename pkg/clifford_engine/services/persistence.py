from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path

from pydantic import ValidationError

from clifford_engine.domain import AsymmetricFormError, ConfigurationError
from clifford_engine.forms.quadratic import QuadraticForm
from clifford_engine.services.models import MetricDocument

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class MetricRepository:
    """Reads and writes metric-matrix documents."""

    encoding: str = "utf-8"

    def save(self, form: QuadraticForm, path: Path) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding=self.encoding) as fp:
            json.dump(MetricDocument.from_form(form).model_dump(mode="json"), fp, indent=2)
        logger.debug("wrote %d-dimensional metric to %s", form.dim, path)
        return path

    def load(self, path: Path) -> QuadraticForm:
        try:
            with path.open("r", encoding=self.encoding) as fp:
                data = json.load(fp)
        except OSError as exc:
            raise ConfigurationError(f"cannot read metric file {path}: {exc.strerror}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"metric file {path} is not valid JSON: {exc.msg}") from exc
        try:
            document = MetricDocument.model_validate(data)
        except ValidationError as exc:
            first = exc.errors()[0]
            raise AsymmetricFormError(f"invalid metric file {path}: {first['msg']}") from exc
        return document.to_form()
