"""Quadratic-form and matrix-vector oracles."""

from .matvec import MatVecOracle, matvec_oracle
from .quadratic import (
    ExplicitOracle,
    QuadraticFormOracle,
    QueryCounter,
    ScalarFieldProbe,
    ZerothOrderOracle,
    explicit_oracle,
    with_counter,
    zeroth_order_oracle,
)

__all__ = [
    "ExplicitOracle",
    "MatVecOracle",
    "QuadraticFormOracle",
    "QueryCounter",
    "ScalarFieldProbe",
    "ZerothOrderOracle",
    "explicit_oracle",
    "matvec_oracle",
    "with_counter",
    "zeroth_order_oracle",
]
