from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import NoReturn, Sequence

from dotenv import load_dotenv

from clifford_engine.app import AlgebraSession
from clifford_engine.cli.config import CliConfig
from clifford_engine.domain import (
    CliffordError,
    ConfigurationError,
    EngineAssertionError,
    EngineKind,
    OutputFormat,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USER_ERROR = 1
EXIT_INTERNAL_ERROR = 2


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise ConfigurationError(message)


def build_parser(config: CliConfig) -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="clifford-eval",
        description="Evaluate exact geometric algebra expressions or print Cayley tables.",
    )
    algebra = parser.add_mutually_exclusive_group(required=True)
    algebra.add_argument("--signature", metavar="P,Q,R", help="diagonal metric with p positive, q negative, r null squares")
    algebra.add_argument("--metric", metavar="PATH", type=Path, help="JSON metric-matrix file")
    algebra.add_argument("--preset", metavar="NAME", help="named model algebra (complex, quaternion, cga2, ...)")
    parser.add_argument("--eval", dest="expressions", metavar="EXPR", action="append", default=[])
    parser.add_argument("--table", action="store_true", help="print the blade Cayley table")
    parser.add_argument(
        "--engine",
        choices=[kind.value for kind in EngineKind],
        default=config.engine.value,
    )
    parser.add_argument(
        "--format",
        dest="output",
        choices=[fmt.value for fmt in OutputFormat],
        default=config.output.value,
    )
    return parser


def run(argv: Sequence[str] | None, config: CliConfig) -> int:
    args = build_parser(config).parse_args(argv)
    output = OutputFormat(args.output)
    session = AlgebraSession.from_options(
        signature=args.signature,
        metric=args.metric,
        preset=args.preset,
        engine=EngineKind(args.engine),
    )
    if not args.expressions and not args.table:
        raise ConfigurationError("nothing to do: pass --eval EXPR and/or --table")
    for source in args.expressions:
        logger.debug("evaluating %r in %s", source, session.algebra.name)
        print(session.render(source, output))
    if args.table:
        print(session.cayley_table(output))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    load_dotenv()
    try:
        config = CliConfig.from_env()
        logging.basicConfig(
            level=config.log_level,
            stream=sys.stderr,
            format="%(levelname)s %(name)s: %(message)s",
        )
        return run(argv, config)
    except EngineAssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL_ERROR
    except CliffordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER_ERROR


if __name__ == "__main__":
    sys.exit(main())
