"""Estimate service"""

import time

from loguru import logger

from app.constants import messages
from app.services.estimator import (
    DiagonalEstimate,
    estimate_diagonal,
    estimate_diagonal_matvec,
    estimate_diagonal_median,
)
from app.services.matrixmarket import load_source, parse_source
from app.services.oracle import explicit_oracle, matvec_oracle, with_counter

from .models import EstimateRequest, EstimateResult


class EstimateService:
    """Runs one of the three diagonal estimators on a matrix source."""

    def run(self, request: EstimateRequest) -> EstimateResult:
        source = parse_source(request.matrix)
        matrix = load_source(source, seed=request.seed)
        started = time.perf_counter()

        estimate: DiagonalEstimate
        if request.matvec:
            estimate = estimate_diagonal_matvec(
                matvec_oracle(matrix),
                request.sample_size,
                seed=request.seed,
                workers=request.workers,
            )
            queries = estimate.queries
        else:
            counter = with_counter(explicit_oracle(matrix))
            if request.repeats is None:
                estimate = estimate_diagonal(
                    counter, request.sample_size, request.seed, request.workers
                )
            else:
                estimate = estimate_diagonal_median(
                    counter,
                    request.sample_size,
                    request.repeats,
                    request.seed,
                    request.workers,
                )
            queries = counter.count

        seconds = time.perf_counter() - started
        logger.info(
            messages.ESTIMATE_DONE.format(
                label=source.label, queries=queries, seconds=seconds
            )
        )
        return EstimateResult(
            label=source.label, estimate=estimate, queries=queries, seconds=seconds
        )
