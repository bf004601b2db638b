"""Result types for the diagonal estimators."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np


class EstimatorKind(str, enum.Enum):
    """Which estimator produced a DiagonalEstimate."""

    QUADRATIC = "quadratic"
    MEDIAN = "median"
    MATVEC = "matvec"


@dataclass(frozen=True, eq=False)
class DiagonalEstimate:
    """Estimate g of diag(A) plus the sampling metadata that produced it."""

    values: np.ndarray
    sample_size: int
    repeats: int
    queries: int
    seed: int
    kind: EstimatorKind = EstimatorKind.QUADRATIC

    def __post_init__(self) -> None:
        self.values.setflags(write=False)

    @property
    def dim(self) -> int:
        return int(self.values.shape[0])

    def summary(self) -> dict[str, int | str]:
        return {
            "kind": self.kind.value,
            "dim": self.dim,
            "N": self.sample_size,
            "T": self.repeats,
            "queries": self.queries,
            "seed": self.seed,
        }
