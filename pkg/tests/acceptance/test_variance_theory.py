"""Large-sample Monte Carlo checks of the closed forms and the median guarantee.

Run with `pytest -m slow`.
"""

import numpy as np
import pytest

from app.services.estimator import estimate_diagonal, estimate_diagonal_median
from app.services.linalg import MatrixHandle
from app.services.oracle import explicit_oracle
from app.services.theory import (
    elementwise_variance,
    elementwise_variance_profile,
    mc_moment_profile,
    mc_total_variance,
    moment_sq,
    sample_size_median,
    total_variance,
)

pytestmark = pytest.mark.slow

SAMPLES = 10**7


def test_variance_and_moments_match_monte_carlo(battery_matrix: MatrixHandle) -> None:
    profile = mc_moment_profile(battery_matrix, SAMPLES, seed=2024)
    for p in range(1, battery_matrix.dim + 1):
        expected = elementwise_variance(battery_matrix, p)
        assert abs(profile.variance[p - 1] - expected) / max(1.0, expected) <= 0.02

        for n, tolerance in ((0, 0.02), (1, 0.02), (2, 0.04)):
            expected = moment_sq(battery_matrix, p, n)
            measured = profile.moments[n, p - 1]
            assert abs(measured - expected) / max(1.0, expected) <= tolerance


def test_aggregate_sides_with_direct_sum(battery_matrix: MatrixHandle) -> None:
    report = total_variance(battery_matrix)
    measured = mc_total_variance(battery_matrix, SAMPLES, seed=99)
    assert measured == pytest.approx(report.direct_sum, rel=0.03, abs=1.0)
    if report.printed_form_excess > 0.1 * report.direct_sum:
        assert abs(measured - report.direct_sum) < abs(
            measured - report.printed_closed_form
        )


def test_median_guarantee(reference: MatrixHandle) -> None:
    plan = sample_size_median(reference, 1, 1.0, 0.05)
    assert (plan.sample_size, plan.repeats) == (480, 24)

    oracle = explicit_oracle(reference)
    failures = sum(
        abs(
            estimate_diagonal_median(
                oracle, plan.sample_size, plan.repeats, seed=seed, workers=1
            ).values[0]
            - 2.0
        )
        > 1.0
        for seed in range(500)
    )
    assert failures / 500 <= 0.08


def test_identity_variance_by_brute_force() -> None:
    # V = 2 (d + 4)^2 + 4 d + 20 for the identity
    profile = mc_moment_profile(MatrixHandle.from_dense(np.eye(4)), SAMPLES, seed=5)
    assert profile.variance == pytest.approx(np.full(4, 164.0), rel=0.02)


@pytest.mark.parametrize("sample_size", [50, 200])
def test_estimator_variance_scales_as_one_over_n(
    reference: MatrixHandle, sample_size: int
) -> None:
    oracle = explicit_oracle(reference)
    runs = np.stack(
        [
            estimate_diagonal(oracle, sample_size, seed=seed, workers=1).values
            for seed in range(4000)
        ]
    )
    expected = elementwise_variance_profile(reference) / (4.0 * sample_size)
    empirical = runs.var(axis=0, ddof=1)
    assert np.all(np.abs(empirical / expected - 1.0) <= 0.10)
