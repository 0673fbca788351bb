"""
dnacc command-line entry point.

Usage:
    dnacc distance z1.json z2.json
    dnacc verify-dcc code.json --tau 1 --ei 1 --K 1 --mode both
    dnacc construct --method search-exact --l 2 --M 4 --d 2 -o P.txt
    dnacc --format csv bounds --sweep 3

Exit codes: 0 ok, 2 input, 3 parameters, 4 theorem discrepancy, 5 budget, 6 precondition.
"""
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from .cli import COMMANDS, RunConfig, build_parser, emit
from .core.constants import DEFAULT_LOGGING_CONFIG_PATH
from .core.errors import DnaccError, InvalidParams
from .core.logging import setup_logging
from .core.settings import configure, get_config

logger = logging.getLogger(__name__)

_GLOBAL_ARGS = {"command", "config", "logging_config", "log_level", "format", "output", "seed"}


def build_run_config(args) -> RunConfig:
    options = {k: v for k, v in vars(args).items() if k not in _GLOBAL_ARGS}
    try:
        return RunConfig(
            command=args.command,
            seed=args.seed,
            output=args.output,
            format=args.format,
            caps=get_config().budgets(),
            options=options,
        )
    except ValidationError as e:
        raise InvalidParams(f"invalid run configuration: {e}") from e


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        if args.config:
            configure(args.config)
        config = get_config()
        setup_logging(
            args.logging_config or config.get("logging.config", DEFAULT_LOGGING_CONFIG_PATH),
            args.log_level or config.get("logging.level"),
        )
        run = build_run_config(args)
        logger.debug(f"running {run.command} with {run.options}")
        result = COMMANDS[run.command](run)
        emit(result, run.format, run.output)
        if result.failure is not None:
            raise result.failure
    except DnaccError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
