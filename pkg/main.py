"""Command-line entrypoint for quadform-diag."""

from __future__ import annotations

import sys
from collections.abc import Sequence

from app.commands import build_parser
from app.core.exceptions import HandleExceptions
from app.core.extra.logger import configure_logger, run_context


def run(argv: Sequence[str] | None = None) -> None:
    """Parse arguments and dispatch to the selected subcommand."""
    args = build_parser().parse_args(argv)
    if args.log_level:
        configure_logger(args.log_level)
    args.handler(args)


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit code (0 ok, 1 usage, 2 I/O, 3 degenerate)."""
    with run_context():
        try:
            return HandleExceptions(run)(argv)
        except SystemExit as exc:
            # --help and --version
            return exc.code if isinstance(exc.code, int) else 0


if __name__ == "__main__":
    sys.exit(main())
