from __future__ import annotations

from clifford_engine.services.models import CayleyReport, EvaluationReport, MetricDocument
from clifford_engine.services.persistence import MetricRepository

__all__ = ["CayleyReport", "EvaluationReport", "MetricDocument", "MetricRepository"]
