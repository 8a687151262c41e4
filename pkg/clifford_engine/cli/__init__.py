from __future__ import annotations

from clifford_engine.cli.evaluator import Evaluator
from clifford_engine.cli.parser import BasisTokens, Expr, parse

__all__ = ["BasisTokens", "Evaluator", "Expr", "parse"]
