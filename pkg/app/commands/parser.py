"""Argument parser wiring for the subcommands."""

from __future__ import annotations

import argparse
from typing import NoReturn

from app.constants import messages
from app.core.config import settings
from app.core.exceptions import InvalidArgumentError

from .estimate.controller import register as register_estimate
from .experiment.controller import register as register_experiment
from .predict.controller import register as register_predict


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so usage errors map to exit 1."""

    def error(self, message: str) -> NoReturn:
        raise InvalidArgumentError(f"{messages.USAGE_ERROR}: {message}")


def build_parser() -> CommandParser:
    parser = CommandParser(
        prog="quadform-diag",
        description="Diagonal estimation from quadratic-form queries u^T A u.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {settings.RELEASE_VERSION}"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    register_estimate(subparsers)
    register_predict(subparsers)
    register_experiment(subparsers)
    return parser
