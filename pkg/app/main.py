"""
vdb-digraph command-line entry point

    python -m app.main verify --n 4 --index harmonic
"""
from typing import List, Optional
import logging
import sys

import structlog

from app.cli.render import render
from app.cli.router import config_from_args, dispatch, parse
from app.core.config import settings
from app.core.exceptions import EXIT_OK, VdbException, VerificationError


def configure_logging(verbose: bool = False) -> None:
    """structlog on top of stdlib logging; records go to stderr"""
    level = "DEBUG" if verbose else settings.effective_log_level
    logging.basicConfig(stream=sys.stderr, level=level, format="%(message)s", force=True)
    renderer = (
        structlog.dev.ConsoleRenderer()
        if settings.LOG_FORMAT == "console"
        else structlog.processors.JSONRenderer()
    )
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            renderer,
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


logger = structlog.get_logger()


def main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand and return its exit code"""
    args = parse(argv)
    configure_logging(args.verbose)
    try:
        config = config_from_args(args)
        result = dispatch(config)
        sys.stdout.write(render(result, config.output_format))
        if not result.consistent:
            raise VerificationError(
                f"{config.command.value} found an inconsistency",
                details={"command": config.command.value}
            )
    except VdbException as e:
        logger.error(
            "Command failed",
            error_code=e.error_code,
            message=e.message,
            details=e.details,
        )
        print(f"error: {e.message}", file=sys.stderr)
        return e.exit_code
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
