"""Experiment service"""

import csv
import math
import time
from pathlib import Path

import numpy as np
from loguru import logger

from app.commands.helper import resolve_index
from app.constants import messages
from app.core.enums import Selector, SourceScheme
from app.core.exceptions import DegenerateTargetError
from app.core.extra import run_id_ctx_var
from app.services.estimator import estimate_diagonal
from app.services.linalg import MatrixHandle, diag, diag_sq_sum, trace
from app.services.matrixmarket import load_source, parse_source
from app.services.oracle import explicit_oracle
from app.services.theory import (
    predicted_rel_err_elementwise,
    predicted_rel_err_normwise,
    total_variance,
)

from .models import (
    CSV_COLUMNS,
    ExperimentResult,
    ExperimentRow,
    ExperimentSpec,
    ExperimentSummary,
)
from .plot import plot_selector

RESULTS_FILE = "results.csv"
SUMMARY_FILE = "summary.json"


class ExperimentService:
    """Relative-error sweeps of the quadratic-form estimator against theory."""

    def run(self, spec: ExperimentSpec) -> ExperimentResult:
        source = parse_source(spec.matrix)
        if source.scheme is SourceScheme.MM and not (
            source.path is not None and source.path.is_file()
        ):
            logger.warning(messages.MSC10480_MISSING.format(path=source.path))
            return ExperimentResult(skipped=True)

        started = time.perf_counter()
        matrix = load_source(source, seed=spec.seed)
        targets: dict[Selector, int | None] = {
            selector: (
                None if selector is Selector.NORMWISE else resolve_index(matrix, selector)
            )
            for selector in spec.selectors
        }
        rows = self.sweep(matrix, source.label, spec, targets)

        spec.out.mkdir(parents=True, exist_ok=True)
        csv_path = self.write_csv(rows, spec.out / RESULTS_FILE)
        plot_paths = [
            plot_selector(
                [row for row in rows if row.selector == selector.value],
                spec.out / f"{selector.value}.svg",
                title=f"{source.label}, {selector.value}",
            )
            for selector in targets
        ]

        seconds = time.perf_counter() - started
        summary = ExperimentSummary(
            matrix=source.label,
            dim=matrix.dim,
            trace=trace(matrix),
            diag_sq_sum=diag_sq_sum(matrix),
            variance=total_variance(matrix),
            grid=spec.grid,
            repeats=spec.repeats,
            seed=spec.seed,
            selectors={selector.value: p for selector, p in targets.items()},
            seconds=seconds,
            run_id=run_id_ctx_var.get(),
        )
        (spec.out / SUMMARY_FILE).write_text(summary.model_dump_json(indent=2) + "\n")

        logger.info(
            messages.EXPERIMENT_DONE.format(
                rows=len(rows), plots=len(plot_paths), out=spec.out, seconds=seconds
            )
        )
        return ExperimentResult(rows=rows, csv_path=csv_path, plot_paths=plot_paths)

    def sweep(
        self,
        matrix: MatrixHandle,
        label: str,
        spec: ExperimentSpec,
        targets: dict[Selector, int | None],
    ) -> list[ExperimentRow]:
        """Run R estimates per grid point and score every selector on each."""
        oracle = explicit_oracle(matrix)
        diagonal = diag(matrix)
        diag_sq = float(np.square(diagonal).sum())
        sums = {selector: np.zeros(len(spec.grid)) for selector in targets}

        for k, sample_size in enumerate(spec.grid):
            for run in range(1, spec.repeats + 1):
                g = estimate_diagonal(
                    oracle, sample_size, seed=spec.seed + run, workers=spec.workers
                ).values
                for selector, p in targets.items():
                    sums[selector][k] += self.relative_error(g, diagonal, diag_sq, p)
            logger.info(
                messages.EXPERIMENT_PROGRESS.format(
                    label=label,
                    sample_size=sample_size,
                    done=k + 1,
                    total=len(spec.grid),
                )
            )

        rows = []
        for selector, p in targets.items():
            theory = self.theory_curve(matrix, selector, p, spec)
            for k, sample_size in enumerate(spec.grid):
                rows.append(
                    ExperimentRow(
                        matrix=label,
                        selector=selector.value,
                        N=sample_size,
                        emp_rel_err_mean=float(sums[selector][k] / spec.repeats),
                        theo_rel_err=theory[k],
                        repeats=spec.repeats,
                        seed=spec.seed,
                    )
                )
        return rows

    @staticmethod
    def relative_error(
        g: np.ndarray, diagonal: np.ndarray, diag_sq: float, p: int | None
    ) -> float:
        """(A_pp - g_p)^2 / A_pp^2, or ||g - diag(A)||^2 / sum A_ii^2 when p is None."""
        if p is None:
            if diag_sq == 0:
                return math.nan
            return float(np.square(g - diagonal).sum() / diag_sq)
        app = float(diagonal[p - 1])
        if app == 0:
            return math.nan
        return (app - float(g[p - 1])) ** 2 / app**2

    @staticmethod
    def theory_curve(
        matrix: MatrixHandle, selector: Selector, p: int | None, spec: ExperimentSpec
    ) -> list[float]:
        try:
            if p is None:
                return [
                    predicted_rel_err_normwise(matrix, n, spec.delta) for n in spec.grid
                ]
            return [
                predicted_rel_err_elementwise(matrix, p, n, spec.delta)
                for n in spec.grid
            ]
        except DegenerateTargetError:
            logger.warning(messages.DEGENERATE_SELECTOR.format(selector=selector.value))
            return [math.nan] * len(spec.grid)

    @staticmethod
    def write_csv(rows: list[ExperimentRow], path: Path) -> Path:
        with path.open("w", newline="") as handle:
            writer = csv.DictWriter(handle, fieldnames=CSV_COLUMNS, lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow(row.model_dump())
        return path
