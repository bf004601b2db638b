"""Shared parsing and formatting for the subcommands."""

from __future__ import annotations

import argparse

import numpy as np

from app.constants import messages
from app.core.config import settings
from app.core.enums import LogLevel, Selector
from app.core.exceptions import InvalidArgumentError
from app.services.linalg import MatrixHandle, diag

VALUE_FORMAT = "{:.17g}"


def parse_grid(text: str) -> list[int]:
    """'10,50,100' -> [10, 50, 100]; must be positive and strictly increasing."""
    try:
        grid = [int(item) for item in text.split(",") if item.strip()]
    except ValueError as exc:
        raise InvalidArgumentError(messages.INVALID_GRID.format(value=text)) from exc
    check_grid(grid)
    return grid


def check_grid(grid: list[int]) -> list[int]:
    increasing = all(a < b for a, b in zip(grid, grid[1:]))
    if not grid or grid[0] < 1 or not increasing:
        raise InvalidArgumentError(messages.INVALID_GRID.format(value=grid))
    return grid


def parse_index(text: str) -> int | Selector:
    """A 1-based index or one of first / argmax / argmin."""
    if text.isdigit():
        return int(text)
    try:
        selector = Selector(text.lower())
    except ValueError as exc:
        raise InvalidArgumentError(
            messages.INVALID_SELECTOR.format(value=text)
        ) from exc
    if selector is Selector.NORMWISE:
        raise InvalidArgumentError(messages.INVALID_SELECTOR.format(value=text))
    return selector


def resolve_index(M: MatrixHandle, index: int | Selector) -> int:
    """Turn a selector into a 1-based index; ties go to the smallest index."""
    if isinstance(index, int):
        if not 1 <= index <= M.dim:
            raise InvalidArgumentError(
                messages.INDEX_OUT_OF_RANGE.format(p=index, d=M.dim)
            )
        return index
    magnitudes = np.abs(diag(M))
    if index is Selector.ARGMAX:
        return int(np.argmax(magnitudes)) + 1
    if index is Selector.ARGMIN:
        return int(np.argmin(magnitudes)) + 1
    return 1


def format_value(value: float) -> str:
    return VALUE_FORMAT.format(value)


def add_common_arguments(parser: argparse.ArgumentParser) -> None:
    """Flags every subcommand accepts."""
    parser.add_argument(
        "--matrix", required=True, help="Matrix source: gauss:D, uniform:D or mm:PATH"
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=settings.DEFAULT_SEED,
        help="Seed for generated matrices and Gaussian probes",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="Worker threads for sample evaluation (results do not depend on it)",
    )
    parser.add_argument(
        "--log-level",
        choices=[level.value for level in LogLevel],
        type=str.upper,
        default=None,
    )
