"""Command for predict"""

import argparse
import sys
from typing import TextIO

from app.commands.helper import add_common_arguments, format_value, parse_index
from app.constants import messages
from app.core.enums import PlanMode
from app.core.exceptions import InvalidArgumentError

from .models import PredictRequest, PredictResult
from .service import PredictService


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser(
        "predict", help="Print the sample size for an (eps, delta) target."
    )
    add_common_arguments(parser)
    parser.add_argument("--eps", type=float, required=True)
    parser.add_argument("--delta", type=float, required=True)
    parser.add_argument(
        "--p",
        dest="index",
        type=parse_index,
        default=None,
        help="1-based index or first, argmax, argmin (default first)",
    )
    parser.add_argument("--normwise", action="store_true")
    parser.add_argument(
        "--median", action="store_true", help="Plan the median-of-repeats estimator"
    )
    parser.add_argument(
        "--matvec", action="store_true", help="Plan the matrix-vector baseline"
    )
    parser.set_defaults(handler=PredictCommand().run)


def plan_mode(args: argparse.Namespace) -> PlanMode:
    """Combine --normwise / --median / --matvec into one plan mode."""
    if args.median and args.matvec:
        raise InvalidArgumentError(
            messages.CONFLICTING_FLAGS.format(first="--median", second="--matvec")
        )
    if args.normwise and args.index is not None:
        raise InvalidArgumentError(
            messages.CONFLICTING_FLAGS.format(first="--normwise", second="--p")
        )
    if args.normwise and args.median:
        raise InvalidArgumentError(
            messages.CONFLICTING_FLAGS.format(first="--normwise", second="--median")
        )
    if args.matvec:
        return PlanMode.MATVEC_NORMWISE if args.normwise else PlanMode.MATVEC_ELEMENTWISE
    if args.normwise:
        return PlanMode.NORMWISE
    return PlanMode.MEDIAN if args.median else PlanMode.ELEMENTWISE


class PredictCommand:
    """Predict command."""

    def __init__(self, out: TextIO | None = None) -> None:
        self.service = PredictService()
        self.out = out

    def run(self, args: argparse.Namespace) -> None:
        request = PredictRequest(
            matrix=args.matrix,
            seed=args.seed,
            eps=args.eps,
            delta=args.delta,
            mode=plan_mode(args),
            **({} if args.index is None else {"index": args.index}),
        )
        self.render(self.service.run(request))

    def render(self, result: PredictResult) -> None:
        out = self.out or sys.stdout
        plan = result.plan
        lines = [
            f"matrix={result.matrix}",
            f"d={result.dim}",
            f"mode={plan.mode.value}",
            f"eps={format_value(plan.eps)}",
            f"delta={format_value(plan.delta)}",
        ]
        if plan.index is not None:
            lines.append(f"p={plan.index}")
        if plan.mode is PlanMode.MEDIAN:
            lines += [
                f"N'={plan.sample_size}",
                f"T={plan.repeats}",
                f"total_queries={plan.total_queries}",
            ]
        else:
            lines.append(f"N={plan.sample_size}")
        lines += [f"{key}={format_value(value)}" for key, value in result.inputs.items()]
        out.write("\n".join(lines) + "\n")
        out.flush()
