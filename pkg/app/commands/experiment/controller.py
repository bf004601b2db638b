"""Command for experiment"""

import argparse
import sys
from pathlib import Path
from typing import TextIO

from app.commands.helper import add_common_arguments, parse_grid
from app.core.config import settings
from app.core.enums import Selector, SourceScheme
from app.services.matrixmarket import parse_source

from .models import ExperimentResult, ExperimentSpec
from .service import ExperimentService


def parse_selectors(text: str) -> list[Selector]:
    return [Selector(item.strip().lower()) for item in text.split(",") if item.strip()]


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser(
        "experiment",
        help="Sweep N and compare empirical with predicted relative errors.",
    )
    add_common_arguments(parser)
    parser.add_argument(
        "--grid",
        type=parse_grid,
        default=None,
        help="Comma-separated, strictly increasing sample sizes",
    )
    parser.add_argument("--repeats", type=int, default=settings.DEFAULT_REPEATS)
    parser.add_argument(
        "--selectors",
        type=parse_selectors,
        default=None,
        help="Comma-separated subset of first, argmax, argmin, normwise",
    )
    parser.add_argument(
        "--delta", type=float, default=1.0, help="delta of the theory curve"
    )
    parser.add_argument("--out", type=Path, default=Path(settings.OUTPUT_DIR))
    parser.set_defaults(handler=ExperimentCommand().run)


class ExperimentCommand:
    """Experiment command."""

    def __init__(self, out: TextIO | None = None) -> None:
        self.service = ExperimentService()
        self.out = out

    def run(self, args: argparse.Namespace) -> None:
        optional = {
            key: value
            for key, value in (("grid", args.grid), ("selectors", args.selectors))
            if value is not None
        }
        # file-backed matrices default to the large-N grid
        if args.grid is None and parse_source(args.matrix).scheme is SourceScheme.MM:
            optional["grid"] = list(settings.MSC10480_GRID)
        spec = ExperimentSpec(
            matrix=args.matrix,
            repeats=args.repeats,
            seed=args.seed,
            delta=args.delta,
            out=args.out,
            workers=args.threads,
            **optional,
        )
        self.render(self.service.run(spec))

    def render(self, result: ExperimentResult) -> None:
        out = self.out or sys.stdout
        if result.skipped:
            out.write("skipped\n")
        else:
            out.write(f"{result.csv_path}\n")
            out.writelines(f"{path}\n" for path in result.plot_paths)
        out.flush()
