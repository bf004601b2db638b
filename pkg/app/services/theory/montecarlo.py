"""Brute-force Monte Carlo counterparts of the closed forms in `variance`.

Probes come from the MONTE_CARLO stream namespace, so a validator run never
reuses the vectors an estimator under test consumed with the same seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from loguru import logger

from app.constants import messages
from app.core.enums import StreamNamespace
from app.core.exceptions import InvalidArgumentError
from app.core.parallel import Block, BlockExecutor, split_blocks
from app.services.linalg import GaussianStream, MatrixHandle, diag, quad_form_batch


@dataclass(frozen=True, eq=False)
class MonteCarloProfile:
    """Sample means from one shared set of probes.

    variance[p-1] estimates E[(q u_p^2 - q - 2 A_pp)^2] and moments[n, p-1]
    estimates E[(q u_p^n)^2], with q = u^T A u.
    """

    samples: int
    seed: int
    variance: np.ndarray
    moments: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.variance.shape[0])


def _check_samples(samples: int) -> None:
    if int(samples) != samples or samples < 1:
        raise InvalidArgumentError(
            messages.NON_POSITIVE.format(name="samples", value=samples)
        )


def _check_index(M: MatrixHandle, p: int) -> None:
    if not 1 <= p <= M.dim:
        raise InvalidArgumentError(messages.INDEX_OUT_OF_RANGE.format(p=p, d=M.dim))


def mc_moment_profile(
    M: MatrixHandle,
    samples: int,
    seed: int = 0,
    workers: int | None = None,
) -> MonteCarloProfile:
    """Accumulate squared residuals and squared moments for every p at once."""
    _check_samples(samples)
    d = M.dim
    stream = GaussianStream(seed, StreamNamespace.MONTE_CARLO)
    diagonal = diag(M)

    def evaluate(block: Block) -> np.ndarray:
        U = stream.block(block.start, block.count, d)
        q = quad_form_batch(M, U)[:, None]
        u_sq = U * U
        q_sq = q * q
        partial = np.empty((4, d), dtype=np.float64)
        partial[0] = np.square(q * u_sq - q - 2.0 * diagonal).sum(axis=0)
        partial[1] = q_sq.sum()
        partial[2] = (q_sq * u_sq).sum(axis=0)
        partial[3] = (q_sq * u_sq * u_sq).sum(axis=0)
        return partial

    partials = BlockExecutor(workers).map(evaluate, split_blocks(0, samples, d))
    total = np.zeros((4, d), dtype=np.float64)
    for part in partials:
        total += part
    total /= samples

    logger.debug(f"Monte Carlo profile: d={d}, samples={samples}, seed={seed}")
    return MonteCarloProfile(
        samples=samples, seed=seed, variance=total[0], moments=total[1:]
    )


def mc_variance_profile(
    M: MatrixHandle,
    samples: int,
    seed: int = 0,
    workers: int | None = None,
) -> np.ndarray:
    return mc_moment_profile(M, samples, seed, workers).variance


def mc_variance_oracle(
    M: MatrixHandle,
    p: int,
    samples: int,
    seed: int = 0,
    workers: int | None = None,
) -> float:
    """Empirical mean of (u^T A u * u_p^2 - u^T A u - 2 A_pp)^2."""
    _check_index(M, p)
    return float(mc_variance_profile(M, samples, seed, workers)[p - 1])


def mc_moment(
    M: MatrixHandle,
    p: int,
    n: int,
    samples: int,
    seed: int = 0,
    workers: int | None = None,
) -> float:
    """Empirical mean of (u^T A u * u_p^n)^2 for n in {0, 1, 2}."""
    if n not in (0, 1, 2):
        raise InvalidArgumentError(messages.INVALID_MOMENT_ORDER.format(value=n))
    _check_index(M, p)
    return float(mc_moment_profile(M, samples, seed, workers).moments[n, p - 1])


def mc_total_variance(
    M: MatrixHandle,
    samples: int,
    seed: int = 0,
    workers: int | None = None,
) -> float:
    """Monte Carlo estimate of sum_p V_p."""
    return float(mc_variance_profile(M, samples, seed, workers).sum())
