"""Entry point for the thetalab command line."""
import logging
import sys
from pathlib import Path
from typing import List, Optional

import structlog
from pydantic import ValidationError

from thetalab.cli.commands import build_parser, dispatch
from thetalab.config import get_settings
from thetalab.exceptions import ThetaLabError
from thetalab.monitoring.metrics import write_metrics


def configure_logging(level: str = "WARNING", json_logs: bool = False) -> None:
    """Send stdlib and structlog output to stderr; stdout carries reports only."""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.JSONRenderer() if json_logs else structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
    )


logger = structlog.get_logger()


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit code.

    0 success, 2 input error, 3 identity-check or solver failure,
    4 resource cap exceeded.
    """
    settings = get_settings()
    configure_logging(settings.log_level, settings.log_json)
    parser = build_parser(settings)

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    logger.info("command_started", command=args.command)
    try:
        text, code = dispatch(args, settings)
    except ThetaLabError as exc:
        logger.error("command_failed", command=args.command, error=str(exc))
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    sys.stdout.write(text)
    if args.metrics_out:
        write_metrics(Path(args.metrics_out))
    logger.info("command_finished", command=args.command, exit_code=code)
    return code


if __name__ == "__main__":
    sys.exit(main())
