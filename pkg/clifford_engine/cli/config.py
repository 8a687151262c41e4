from __future__ import annotations

import logging
import os
from dataclasses import dataclass

from clifford_engine.domain import ConfigurationError, EngineKind, OutputFormat


@dataclass(frozen=True, slots=True)
class CliConfig:
    """Defaults for the evaluator; command-line flags take precedence."""

    engine: EngineKind = EngineKind.AUTO
    output: OutputFormat = OutputFormat.HUMAN
    log_level: int = logging.WARNING

    @classmethod
    def from_env(cls) -> CliConfig:
        engine = os.getenv("CLIFFORD_ENGINE", EngineKind.AUTO.value)
        output = os.getenv("CLIFFORD_FORMAT", OutputFormat.HUMAN.value)
        level_name = os.getenv("CLIFFORD_LOG_LEVEL", "WARNING").upper()
        try:
            engine_kind = EngineKind(engine)
        except ValueError as exc:
            raise ConfigurationError(f"CLIFFORD_ENGINE must be one of auto, oracle, fast; got {engine!r}") from exc
        try:
            output_format = OutputFormat(output)
        except ValueError as exc:
            raise ConfigurationError(f"CLIFFORD_FORMAT must be human or json; got {output!r}") from exc
        level = logging.getLevelName(level_name)
        if not isinstance(level, int):
            raise ConfigurationError(f"CLIFFORD_LOG_LEVEL is not a logging level: {level_name!r}")
        return cls(engine=engine_kind, output=output_format, log_level=level)
