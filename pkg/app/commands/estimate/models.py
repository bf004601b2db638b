"""Request and result models for the estimate command."""

from __future__ import annotations

import enum

from pydantic import BaseModel, ConfigDict, Field

from app.services.estimator import DiagonalEstimate


class OutputFormat(str, enum.Enum):
    LINES = "lines"
    CSV = "csv"


class EstimateRequest(BaseModel):
    """Parameters of one diagonal estimate."""

    matrix: str = Field(..., description="gauss:D, uniform:D or mm:PATH.")
    sample_size: int = Field(..., ge=1, description="N, or N' per repeat with T.")
    seed: int = Field(0, ge=0, lt=2**64)
    repeats: int | None = Field(
        None, ge=1, description="T; selects the median-of-repeats estimator."
    )
    matvec: bool = Field(False, description="Use the matrix-vector baseline.")
    output_format: OutputFormat = OutputFormat.LINES
    workers: int | None = Field(None, ge=1)


class EstimateResult(BaseModel):
    """A finished estimate together with where it came from."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    label: str
    estimate: DiagonalEstimate
    queries: int = Field(..., description="Oracle evaluations actually made.")
    seconds: float
