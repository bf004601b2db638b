"""Diagonal estimators."""

from .diagonal import (
    estimate_diagonal,
    estimate_diagonal_matvec,
    estimate_diagonal_median,
)
from .models import DiagonalEstimate, EstimatorKind

__all__ = [
    "DiagonalEstimate",
    "EstimatorKind",
    "estimate_diagonal",
    "estimate_diagonal_matvec",
    "estimate_diagonal_median",
]
