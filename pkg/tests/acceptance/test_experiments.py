"""Relative-error sweeps on the generated and Boeing msc10480 matrices."""

import math
from pathlib import Path

import pytest

from app.commands.experiment.models import ExperimentRow, ExperimentSpec
from app.commands.experiment.service import ExperimentService
from app.core.config import settings
from app.core.enums import Selector

MSC10480 = Path(settings.MSC10480_PATH).expanduser() if settings.MSC10480_PATH else None


def by_selector(rows: list[ExperimentRow], selector: Selector) -> dict[int, ExperimentRow]:
    return {row.N: row for row in rows if row.selector == selector.value}


@pytest.mark.parametrize("matrix", ["gauss:100", "uniform:100"])
def test_generated_matrices_follow_theory(matrix: str, tmp_path: Path) -> None:
    result = ExperimentService().run(ExperimentSpec(matrix=matrix, out=tmp_path))
    assert len(result.rows) == 4 * len(settings.DEFAULT_GRID)

    normwise = by_selector(result.rows, Selector.NORMWISE)[1000]
    assert 0.5 <= normwise.emp_rel_err_mean / normwise.theo_rel_err <= 2.0

    argmax = by_selector(result.rows, Selector.ARGMAX)
    argmin = by_selector(result.rows, Selector.ARGMIN)
    for N in settings.DEFAULT_GRID:
        if N >= 100:
            assert argmax[N].emp_rel_err_mean < argmin[N].emp_rel_err_mean
            assert argmax[N].theo_rel_err < argmin[N].theo_rel_err


def test_error_shrinks_across_the_last_grid_step(tmp_path: Path) -> None:
    grid = [250, 1000]
    failures = {selector: 0 for selector in Selector}
    for seed in range(10):
        spec = ExperimentSpec(
            matrix="gauss:20", grid=grid, repeats=40, seed=seed, out=tmp_path / str(seed)
        )
        rows = ExperimentService().run(spec).rows
        for selector in Selector:
            errors = by_selector(rows, selector)
            bound = 3.0 * errors[grid[0]].emp_rel_err_mean * grid[0] / grid[1]
            if errors[grid[1]].emp_rel_err_mean > bound:
                failures[selector] += 1
    assert all(count == 0 for count in failures.values()), failures


@pytest.mark.slow
@pytest.mark.skipif(
    MSC10480 is None or not MSC10480.is_file(),
    reason="set MSC10480_PATH to a local copy of Boeing/msc10480.mtx",
)
def test_msc10480_argmax_headline(tmp_path: Path) -> None:
    spec = ExperimentSpec(
        matrix=f"mm:{MSC10480}",
        grid=[100],
        repeats=10,
        selectors=[Selector.ARGMAX],
        out=tmp_path,
    )
    (row,) = ExperimentService().run(spec).rows
    assert math.isfinite(row.emp_rel_err_mean)
    assert 0.4 <= row.emp_rel_err_mean <= 3.6
