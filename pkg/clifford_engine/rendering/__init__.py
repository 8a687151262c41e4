from __future__ import annotations

from clifford_engine.rendering.environment import get_template_environment
from clifford_engine.rendering.formatters import evaluation_report, render_table, render_value

__all__ = ["evaluation_report", "get_template_environment", "render_table", "render_value"]
