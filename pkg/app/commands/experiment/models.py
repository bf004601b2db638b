"""Request and result models for the experiment command."""

from __future__ import annotations

from pathlib import Path

from pydantic import BaseModel, Field, field_validator

from app.commands.helper import check_grid
from app.core.config import settings
from app.core.enums import Selector
from app.services.theory import VarianceReport

CSV_COLUMNS = [
    "matrix",
    "selector",
    "N",
    "emp_rel_err_mean",
    "theo_rel_err",
    "repeats",
    "seed",
]


class ExperimentSpec(BaseModel):
    """One relative-error sweep over a sample-size grid."""

    matrix: str = Field(..., description="gauss:D, uniform:D or mm:PATH.")
    grid: list[int] = Field(default_factory=lambda: list(settings.DEFAULT_GRID))
    repeats: int = Field(settings.DEFAULT_REPEATS, ge=1, description="R runs per N.")
    seed: int = Field(settings.DEFAULT_SEED, ge=0, lt=2**64)
    selectors: list[Selector] = Field(
        default_factory=lambda: [
            Selector.FIRST,
            Selector.ARGMAX,
            Selector.ARGMIN,
            Selector.NORMWISE,
        ]
    )
    delta: float = Field(
        1.0, gt=0, description="delta of the theory curve; 1 gives the expectation."
    )
    out: Path = Field(default_factory=lambda: Path(settings.OUTPUT_DIR))
    workers: int | None = Field(None, ge=1)

    @field_validator("grid")
    @classmethod
    def _grid_increasing(cls, grid: list[int]) -> list[int]:
        return check_grid(grid)

    @field_validator("selectors")
    @classmethod
    def _selectors_nonempty(cls, selectors: list[Selector]) -> list[Selector]:
        if not selectors:
            raise ValueError("at least one selector is required")
        return list(dict.fromkeys(selectors))


class ExperimentRow(BaseModel):
    """Mean empirical and predicted relative error at one (selector, N)."""

    matrix: str
    selector: str = Field(..., description="first, argmax, argmin or normwise.")
    N: int
    emp_rel_err_mean: float
    theo_rel_err: float
    repeats: int
    seed: int


class ExperimentResult(BaseModel):
    """Rows in selector-major, N-minor order, plus the files written."""

    rows: list[ExperimentRow] = Field(default_factory=list)
    csv_path: Path | None = None
    plot_paths: list[Path] = Field(default_factory=list)
    skipped: bool = False


class ExperimentSummary(BaseModel):
    """Contents of summary.json."""

    matrix: str
    dim: int
    trace: float
    diag_sq_sum: float
    variance: VarianceReport
    grid: list[int]
    repeats: int
    seed: int
    selectors: dict[str, int | None]
    seconds: float
    run_id: str | None = Field(
        None, description="Run ID of the invocation, as in the log lines."
    )
