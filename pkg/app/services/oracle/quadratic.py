"""Quadratic-form oracles Q_A(u) = u^T A u."""

from __future__ import annotations

import math
import threading
from abc import ABC, abstractmethod
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np
from loguru import logger

from app.constants import messages
from app.core.config import settings
from app.core.exceptions import InvalidArgumentError, NumericError
from app.services.linalg import MatrixHandle, quad_form, quad_form_batch


class QuadraticFormOracle(ABC):
    """Deterministic black box returning u^T A u for a caller-chosen probe u."""

    dim: int
    concurrency_safe: bool = False

    @abstractmethod
    def __call__(self, u: np.ndarray) -> float:
        """Evaluate the quadratic form at one probe."""

    def evaluate_batch(self, U: np.ndarray) -> np.ndarray:
        """Evaluate every row of U; one query per row."""
        return np.fromiter((self(u) for u in U), dtype=np.float64, count=len(U))

    def _check(self, u: np.ndarray) -> np.ndarray:
        vector = np.asarray(u, dtype=np.float64)
        if vector.shape != (self.dim,):
            raise InvalidArgumentError(
                messages.DIMENSION_MISMATCH.format(got=vector.shape, expected=self.dim)
            )
        return vector


class ExplicitOracle(QuadraticFormOracle):
    """Oracle backed by a stored matrix."""

    concurrency_safe = True

    def __init__(self, matrix: MatrixHandle) -> None:
        self.matrix = matrix
        self.dim = matrix.dim

    def __call__(self, u: np.ndarray) -> float:
        return quad_form(self.matrix, u)

    def evaluate_batch(self, U: np.ndarray) -> np.ndarray:
        return quad_form_batch(self.matrix, U)


@dataclass(frozen=True, eq=False)
class ScalarFieldProbe:
    """Objective f, base point x and finite-difference step alpha.

    alpha defaults to ZEROTH_ORDER_ALPHA_SCALE * max(1, ||x||).
    """

    objective: Callable[[np.ndarray], float]
    x: np.ndarray
    alpha: float | None = None
    concurrency_safe: bool = False
    step: float = field(init=False)

    def __post_init__(self) -> None:
        point = np.array(self.x, dtype=np.float64)
        point.setflags(write=False)
        object.__setattr__(self, "x", point)
        step = self.alpha
        if step is None:
            step = settings.ZEROTH_ORDER_ALPHA_SCALE * max(
                1.0, float(np.linalg.norm(point))
            )
        if not step > 0:
            raise InvalidArgumentError(messages.INVALID_ALPHA.format(value=step))
        object.__setattr__(self, "step", float(step))

    @property
    def dim(self) -> int:
        return int(self.x.shape[0])


class ZerothOrderOracle(QuadraticFormOracle):
    """Three-point stencil (f(x + a u) + f(x - a u) - 2 f(x)) / a^2.

    f(x) is evaluated once and cached, so the first query costs three function
    evaluations and every later query two.
    """

    def __init__(self, probe: ScalarFieldProbe) -> None:
        self.probe = probe
        self.dim = probe.dim
        self.concurrency_safe = probe.concurrency_safe
        self._lock = threading.Lock()
        self._base_lock = threading.Lock()
        self._base_value: float | None = None
        self._function_evaluations = 0

    @property
    def function_evaluations(self) -> int:
        return self._function_evaluations

    def _evaluate(self, y: np.ndarray) -> float:
        value = float(self.probe.objective(y))
        with self._lock:
            self._function_evaluations += 1
        if not math.isfinite(value):
            raise NumericError(messages.NON_FINITE_VALUE.format(alpha=self.probe.step))
        return value

    def base_value(self) -> float:
        """Cached f(x)."""
        with self._base_lock:
            if self._base_value is None:
                self._base_value = self._evaluate(self.probe.x)
            return self._base_value

    def __call__(self, u: np.ndarray) -> float:
        vector = self._check(u)
        alpha = self.probe.step
        x = self.probe.x
        forward = self._evaluate(x + alpha * vector)
        backward = self._evaluate(x - alpha * vector)
        return (forward + backward - 2.0 * self.base_value()) / alpha**2


class QueryCounter(QuadraticFormOracle):
    """Forwarding wrapper that counts quadratic-form queries exactly."""

    def __init__(self, oracle: QuadraticFormOracle) -> None:
        self.oracle = oracle
        self.dim = oracle.dim
        self.concurrency_safe = oracle.concurrency_safe
        self._lock = threading.Lock()
        self._count = 0

    @property
    def count(self) -> int:
        with self._lock:
            return self._count

    def __call__(self, u: np.ndarray) -> float:
        value = self.oracle(u)
        with self._lock:
            self._count += 1
        return value

    def evaluate_batch(self, U: np.ndarray) -> np.ndarray:
        values = self.oracle.evaluate_batch(U)
        with self._lock:
            self._count += len(values)
        logger.trace(f"Counted {len(values)} queries (total {self._count})")
        return values


def explicit_oracle(matrix: MatrixHandle) -> ExplicitOracle:
    return ExplicitOracle(matrix)


def zeroth_order_oracle(probe: ScalarFieldProbe) -> ZerothOrderOracle:
    return ZerothOrderOracle(probe)


def with_counter(oracle: QuadraticFormOracle) -> QueryCounter:
    return QueryCounter(oracle)
