"""Request and result models for the predict command."""

from __future__ import annotations

from pydantic import BaseModel, Field

from app.core.enums import PlanMode, Selector
from app.services.theory import SamplePlan


class PredictRequest(BaseModel):
    """Accuracy target and which guarantee to plan for."""

    matrix: str
    seed: int = Field(0, ge=0, lt=2**64)
    eps: float = Field(..., description="Target accuracy; validated by the planner.")
    delta: float = Field(..., description="Failure probability in (0, 1).")
    index: int | Selector = Field(Selector.FIRST, description="1-based p or selector.")
    mode: PlanMode = PlanMode.ELEMENTWISE


class PredictResult(BaseModel):
    """Plan plus the matrix quantities it was computed from."""

    matrix: str
    dim: int
    plan: SamplePlan
    inputs: dict[str, float] = Field(
        default_factory=dict, description="Variance inputs used by the plan."
    )
