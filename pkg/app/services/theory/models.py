"""Schemas for variance reports and sample plans."""

from __future__ import annotations

from pydantic import BaseModel, Field, computed_field

from app.core.enums import PlanMode


class VarianceReport(BaseModel):
    """Single-sample variance of the quadratic-form estimator."""

    dim: int = Field(..., ge=1, description="Matrix dimension d.")
    per_index: list[float] = Field(
        ..., description="V_p for p = 1..d, the per-coordinate second central moment."
    )
    direct_sum: float = Field(..., description="Sum over p of V_p.")
    printed_closed_form: float = Field(
        ...,
        description="Aggregate with the (4d + 16) (tr A)^2 coefficient as printed.",
    )
    corrected_closed_form: float = Field(
        ...,
        description="Aggregate with the (2d + 16) (tr A)^2 coefficient from expansion.",
    )

    @computed_field  # type: ignore[prop-decorator]
    @property
    def printed_form_excess(self) -> float:
        """printed_closed_form - direct_sum; equals 2 d (tr A)^2."""
        return self.printed_closed_form - self.direct_sum


class SamplePlan(BaseModel):
    """Sample size meeting an (eps, delta) accuracy target."""

    mode: PlanMode
    eps: float = Field(..., gt=0)
    delta: float = Field(..., gt=0, lt=1)
    sample_size: int = Field(
        ..., ge=1, description="N, or N' per repeat in median mode."
    )
    repeats: int = Field(1, ge=1, description="T; 1 except in median mode.")
    index: int | None = Field(None, ge=1, description="1-based p for element-wise plans.")
    variance: float = Field(
        ..., description="Variance-like numerator the plan was computed from."
    )

    @computed_field  # type: ignore[prop-decorator]
    @property
    def total_queries(self) -> int:
        return self.sample_size * self.repeats
