"""Command for estimate"""

import argparse
import csv
import sys
from typing import TextIO

from app.commands.helper import add_common_arguments, format_value
from app.constants import messages
from app.core.exceptions import InvalidArgumentError

from .models import EstimateRequest, EstimateResult, OutputFormat
from .service import EstimateService


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser(
        "estimate", help="Estimate diag(A) from quadratic-form queries."
    )
    add_common_arguments(parser)
    parser.add_argument("--n", type=int, required=True, help="Sample size N")
    parser.add_argument(
        "--median-T",
        dest="median_t",
        type=int,
        default=None,
        help="Take the median of T independent N-sample estimates",
    )
    parser.add_argument(
        "--matvec",
        action="store_true",
        help="Use the matrix-vector baseline instead of quadratic forms",
    )
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.LINES.value,
    )
    parser.set_defaults(handler=EstimateCommand().run)


class EstimateCommand:
    """Estimate command."""

    def __init__(self, out: TextIO | None = None) -> None:
        self.service = EstimateService()
        self.out = out

    def run(self, args: argparse.Namespace) -> None:
        if args.median_t is not None and args.matvec:
            raise InvalidArgumentError(
                messages.CONFLICTING_FLAGS.format(first="--median-T", second="--matvec")
            )
        request = EstimateRequest(
            matrix=args.matrix,
            sample_size=args.n,
            seed=args.seed,
            repeats=args.median_t,
            matvec=args.matvec,
            output_format=args.output_format,
            workers=args.threads,
        )
        self.render(self.service.run(request), request.output_format)

    def render(self, result: EstimateResult, output_format: OutputFormat) -> None:
        """Values and the query count; nothing run-dependent such as wall time."""
        out = self.out or sys.stdout
        estimate = result.estimate
        meta = " ".join(f"{k}={v}" for k, v in estimate.summary().items())
        out.write(f"# matrix={result.label} {meta} oracle_queries={result.queries}\n")
        if output_format is OutputFormat.CSV:
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(["p", "g"])
            for p, value in enumerate(estimate.values, start=1):
                writer.writerow([p, format_value(value)])
        else:
            for value in estimate.values:
                out.write(f"{format_value(value)}\n")
        out.flush()
