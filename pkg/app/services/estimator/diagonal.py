"""Stochastic diagonal estimators.

All three estimators draw probes from one GaussianStream(seed) and split the
sample range into blocks whose boundaries depend only on (start, d). Block
partial sums are reduced left to right, so a fixed seed reproduces the
estimate bitwise whatever the worker count.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence

import numpy as np
from loguru import logger

from app.constants import messages
from app.core.exceptions import InvalidArgumentError
from app.core.parallel import Block, BlockExecutor, split_blocks
from app.services.linalg import GaussianStream
from app.services.oracle import MatVecOracle, QuadraticFormOracle

from .models import DiagonalEstimate, EstimatorKind


def _require_positive(name: str, value: int) -> None:
    if int(value) != value or value < 1:
        raise InvalidArgumentError(messages.NON_POSITIVE.format(name=name, value=value))


def _reduce(partials: Sequence[np.ndarray], d: int) -> np.ndarray:
    total = np.zeros(d, dtype=np.float64)
    for part in partials:
        total += part
    return total


def _quadratic_partial(
    oracle: QuadraticFormOracle, stream: GaussianStream
) -> Callable[[Block], np.ndarray]:
    def evaluate(block: Block) -> np.ndarray:
        U = stream.block(block.start, block.count, oracle.dim)
        values = oracle.evaluate_batch(U)
        # (u^T A u) * ([u]^2 - 1), summed over the block; no d x d intermediate
        return np.einsum("i,ij->j", values, U * U - 1.0)

    return evaluate


def _quadratic_repeats(
    oracle: QuadraticFormOracle,
    sample_size: int,
    repeats: int,
    seed: int,
    workers: int | None,
) -> list[np.ndarray]:
    """Run the quadratic-form sums on consecutive, disjoint sample ranges."""
    d = oracle.dim
    stream = GaussianStream(seed)
    per_repeat = [split_blocks(t * sample_size, sample_size, d) for t in range(repeats)]
    flat = [block for blocks in per_repeat for block in blocks]

    partials = BlockExecutor(workers).map(
        _quadratic_partial(oracle, stream), flat, concurrent=oracle.concurrency_safe
    )

    estimates = []
    cursor = 0
    for blocks in per_repeat:
        chunk = partials[cursor : cursor + len(blocks)]
        cursor += len(blocks)
        estimates.append(_reduce(chunk, d) / (2.0 * sample_size))
    return estimates


def estimate_diagonal(
    oracle: QuadraticFormOracle,
    sample_size: int,
    seed: int = 0,
    workers: int | None = None,
) -> DiagonalEstimate:
    """Quadratic-form diagonal estimator.

    g = 1/(2N) * sum_j (u_j^T A u_j) * ([u_j]^2 - 1), with u_j ~ N(0, I_d).
    E[g] = diag(A) for any square A, symmetric or not.
    """
    _require_positive("N", sample_size)
    (values,) = _quadratic_repeats(oracle, sample_size, 1, seed, workers)
    logger.debug(f"Quadratic-form estimate: d={oracle.dim}, N={sample_size}, seed={seed}")
    return DiagonalEstimate(
        values=values,
        sample_size=sample_size,
        repeats=1,
        queries=sample_size,
        seed=seed,
        kind=EstimatorKind.QUADRATIC,
    )


def estimate_diagonal_median(
    oracle: QuadraticFormOracle,
    sample_size: int,
    repeats: int,
    seed: int = 0,
    workers: int | None = None,
) -> DiagonalEstimate:
    """Coordinate-wise median of `repeats` independent quadratic-form estimates.

    Repeat t consumes sample indices [t*N', (t+1)*N') of the same stream, so
    the probes used are exactly those of a single N'*T-sample run.
    """
    _require_positive("N'", sample_size)
    _require_positive("T", repeats)
    estimates = _quadratic_repeats(oracle, sample_size, repeats, seed, workers)
    values = np.median(np.stack(estimates), axis=0) if repeats > 1 else estimates[0]
    logger.debug(
        f"Median estimate: d={oracle.dim}, N'={sample_size}, T={repeats}, seed={seed}"
    )
    return DiagonalEstimate(
        values=np.asarray(values, dtype=np.float64),
        sample_size=sample_size,
        repeats=repeats,
        queries=sample_size * repeats,
        seed=seed,
        kind=EstimatorKind.MEDIAN,
    )


def estimate_diagonal_matvec(
    oracle: MatVecOracle,
    sample_size: int,
    seed: int = 0,
    workers: int | None = None,
) -> DiagonalEstimate:
    """Baseline g = 1/N * sum_i (A w_i) * w_i from matrix-vector products."""
    _require_positive("N", sample_size)
    d = oracle.dim
    stream = GaussianStream(seed)

    def evaluate(block: Block) -> np.ndarray:
        W = stream.block(block.start, block.count, d)
        return np.einsum("ij,ij->j", oracle.apply_batch(W), W)

    partials = BlockExecutor(workers).map(
        evaluate, split_blocks(0, sample_size, d), concurrent=oracle.concurrency_safe
    )
    logger.debug(f"Matrix-vector estimate: d={d}, N={sample_size}, seed={seed}")
    return DiagonalEstimate(
        values=_reduce(partials, d) / sample_size,
        sample_size=sample_size,
        repeats=1,
        queries=sample_size,
        seed=seed,
        kind=EstimatorKind.MATVEC,
    )
