"""Tests for the variance theory, sample-size plans and Monte Carlo validators."""

import math

import numpy as np
import pytest

from app.core.enums import PlanMode
from app.core.exceptions import DegenerateTargetError, InvalidArgumentError
from app.services.estimator import estimate_diagonal
from app.services.linalg import MatrixHandle, diag
from app.services.oracle import explicit_oracle
from app.services.theory import (
    corrected_closed_form_total,
    elementwise_variance,
    elementwise_variance_profile,
    mc_moment,
    mc_moment_profile,
    mc_total_variance,
    mc_variance_oracle,
    median_repeats,
    moment_sq,
    predicted_rel_err_elementwise,
    predicted_rel_err_normwise,
    predicted_rel_err_normwise_printed,
    printed_closed_form_total,
    sample_size_elementwise,
    sample_size_matvec_elementwise,
    sample_size_matvec_normwise,
    sample_size_median,
    sample_size_normwise,
    total_variance,
)

SCALAR = MatrixHandle.from_dense([[1.0]])
ZERO_DIAGONAL = MatrixHandle.from_dense([[0.0, 1.0], [1.0, 0.0]])


class TestElementwiseVariance:
    """V_p = 2 (tr A + 4 A_pp)^2 + ||A + A^T||^2 + 8 ||A_p + A^p||^2 - 12 A_pp^2."""

    def test_worked_examples(self, reference: MatrixHandle) -> None:
        assert elementwise_variance(SCALAR, 1) == 74.0
        assert elementwise_variance(reference, 1) == 480.0
        assert elementwise_variance(reference, 2) == 820.0

    @pytest.mark.parametrize(("d", "expected"), [(4, 164.0), (7, 290.0), (8, 340.0)])
    def test_identity(self, d: int, expected: float) -> None:
        profile = elementwise_variance_profile(MatrixHandle.from_dense(np.eye(d)))
        assert np.array_equal(profile, np.full(d, expected))

    def test_zero_matrix(self) -> None:
        assert elementwise_variance(MatrixHandle.from_dense(np.zeros((3, 3))), 2) == 0.0

    def test_profile_matches_single_index(self, battery_matrix: MatrixHandle) -> None:
        profile = elementwise_variance_profile(battery_matrix)
        for p in range(1, battery_matrix.dim + 1):
            assert profile[p - 1] == elementwise_variance(battery_matrix, p)
        assert np.all(profile >= 0)

    @pytest.mark.parametrize("p", [0, 3])
    def test_index_out_of_range(self, reference: MatrixHandle, p: int) -> None:
        with pytest.raises(InvalidArgumentError):
            elementwise_variance(reference, p)


class TestTotalVariance:
    """Direct sum against the printed and corrected closed forms."""

    def test_reference(self, reference: MatrixHandle) -> None:
        report = total_variance(reference)
        assert report.per_index == [480.0, 820.0]
        assert report.direct_sum == 1300.0
        assert report.printed_closed_form == 1400.0
        assert report.corrected_closed_form == 1300.0
        assert report.printed_form_excess == 100.0

    def test_scalar(self) -> None:
        report = total_variance(SCALAR)
        assert (report.direct_sum, report.printed_closed_form) == (74.0, 76.0)
        assert corrected_closed_form_total(SCALAR) == 74.0

    def test_zero_matrix(self) -> None:
        report = total_variance(MatrixHandle.from_dense(np.zeros((5, 5))))
        assert report.direct_sum == 0.0
        assert report.printed_closed_form == 0.0

    def test_corrected_form_equals_direct_sum(self, battery_matrix: MatrixHandle) -> None:
        report = total_variance(battery_matrix)
        assert report.corrected_closed_form == pytest.approx(
            report.direct_sum, rel=1e-10, abs=1e-9
        )

    def test_printed_excess_is_two_d_trace_squared(
        self, battery_matrix: MatrixHandle
    ) -> None:
        report = total_variance(battery_matrix)
        tr = float(np.sum(diag(battery_matrix)))
        assert report.printed_form_excess == pytest.approx(
            2 * battery_matrix.dim * tr**2, rel=1e-9, abs=1e-9
        )
        assert printed_closed_form_total(battery_matrix) >= report.direct_sum - 1e-9


class TestMoments:
    """E[(u^T A u u_p^n)^2] for n in {0, 1, 2}."""

    def test_scalar_gaussian_moments(self) -> None:
        # E[u^4], E[u^6], E[u^8]
        assert [moment_sq(SCALAR, 1, n) for n in (0, 1, 2)] == [3.0, 15.0, 105.0]

    def test_reference_zeroth_moment(self, reference: MatrixHandle) -> None:
        assert moment_sq(reference, 1, 0) == 52.0
        assert moment_sq(reference, 2, 0) == 52.0

    def test_variance_decomposes_into_moments(self, battery_matrix: MatrixHandle) -> None:
        diagonal = diag(battery_matrix)
        for p in range(1, battery_matrix.dim + 1):
            m0, m1, m2 = (moment_sq(battery_matrix, p, n) for n in (0, 1, 2))
            expected = m2 - 2.0 * m1 + m0 - 4.0 * diagonal[p - 1] ** 2
            assert elementwise_variance(battery_matrix, p) == pytest.approx(
                expected, rel=1e-9, abs=1e-9
            )

    def test_rejects_unknown_order(self, reference: MatrixHandle) -> None:
        with pytest.raises(InvalidArgumentError):
            moment_sq(reference, 1, 3)


class TestSamplePlans:
    """Ceilings floored at 1, natural logs."""

    def test_elementwise(self, reference: MatrixHandle) -> None:
        assert sample_size_elementwise(SCALAR, 1, 1.0, 0.25).sample_size == 74
        plan = sample_size_elementwise(reference, 2, 1.0, 0.25)
        assert plan.sample_size == 820
        assert plan.mode is PlanMode.ELEMENTWISE
        assert (plan.index, plan.variance, plan.total_queries) == (2, 820.0, 820)

    def test_floor_at_one(self, reference: MatrixHandle) -> None:
        assert sample_size_elementwise(reference, 1, 1000.0, 0.5).sample_size == 1

    def test_exact_quotient_is_not_bumped(self, reference: MatrixHandle) -> None:
        # 480 / (4 * 0.24) = 500 up to rounding
        assert sample_size_elementwise(reference, 1, 1.0, 0.24).sample_size == 500

    def test_large_plan_is_never_below_quotient(self, reference: MatrixHandle) -> None:
        target = 1e10 + 5
        eps = math.sqrt(480.0 / (4.0 * 0.25 * target))
        plan = sample_size_elementwise(reference, 1, eps, 0.25)
        assert plan.sample_size >= target
        assert plan.sample_size == 10_000_000_005

    def test_tiny_eps_reports_unrepresentable_plan(self, reference: MatrixHandle) -> None:
        with pytest.raises(InvalidArgumentError, match="representable"):
            sample_size_elementwise(reference, 1, 1e-200, 0.25)
        with pytest.raises(InvalidArgumentError, match="representable"):
            sample_size_median(reference, 1, 1e-200, 0.25)
        with pytest.raises(InvalidArgumentError, match="representable"):
            sample_size_matvec_elementwise(reference, 1, 1e-200, 0.25)

    def test_tiny_eps_does_not_underflow_normwise(self, reference: MatrixHandle) -> None:
        # eps enters once, so the quotient stays finite
        assert sample_size_normwise(reference, 1e-200, 0.5).sample_size > 10**200

    def test_zero_diagonal_entry_is_allowed(self) -> None:
        assert sample_size_elementwise(ZERO_DIAGONAL, 1, 1.0, 0.5).sample_size >= 1

    def test_normwise(self, reference: MatrixHandle) -> None:
        assert sample_size_normwise(SCALAR, 1.0, 0.25).sample_size == 74
        plan = sample_size_normwise(reference, 0.1, 0.5)
        assert plan.sample_size == 500
        assert plan.index is None

    def test_normwise_zero_diagonal(self) -> None:
        with pytest.raises(DegenerateTargetError):
            sample_size_normwise(ZERO_DIAGONAL, 0.1, 0.1)

    def test_median(self, reference: MatrixHandle) -> None:
        assert median_repeats(0.05) == 24
        plan = sample_size_median(reference, 1, 10.0, 0.05)
        assert (plan.sample_size, plan.repeats, plan.total_queries) == (5, 24, 120)
        assert plan.mode is PlanMode.MEDIAN

    def test_median_repeats_floor(self) -> None:
        assert median_repeats(0.99) == 1

    def test_matvec_elementwise(self, reference: MatrixHandle) -> None:
        assert sample_size_matvec_elementwise(reference, 1, 100.0, 0.5).sample_size == 1
        assert (
            sample_size_matvec_elementwise(reference, 1, 1.0, 2.0 / math.e**2).sample_size
            == 4
        )
        # row 2 has no off-diagonal mass
        assert sample_size_matvec_elementwise(reference, 2, 0.01, 0.01).sample_size == 1

    def test_matvec_normwise(self, reference: MatrixHandle) -> None:
        assert sample_size_matvec_normwise(reference, 0.01, math.exp(-1)).sample_size == 8
        with pytest.raises(DegenerateTargetError):
            sample_size_matvec_normwise(ZERO_DIAGONAL, 0.1, 0.1)

    def test_smaller_delta_never_shrinks_plan(self, reference: MatrixHandle) -> None:
        sizes = [
            sample_size_elementwise(reference, 1, 0.5, delta).sample_size
            for delta in (0.5, 0.2, 0.1, 0.01)
        ]
        assert sizes == sorted(sizes)

    @pytest.mark.parametrize(("eps", "delta"), [(0.0, 0.1), (-1.0, 0.1), (1.0, 0.0), (1.0, 1.0)])
    def test_rejects_invalid_targets(
        self, reference: MatrixHandle, eps: float, delta: float
    ) -> None:
        with pytest.raises(InvalidArgumentError):
            sample_size_elementwise(reference, 1, eps, delta)
        with pytest.raises(InvalidArgumentError):
            sample_size_normwise(reference, eps, delta)


class TestPredictions:
    """Predicted relative errors, the inverse of the plans."""

    def test_elementwise(self, reference: MatrixHandle) -> None:
        assert predicted_rel_err_elementwise(SCALAR, 1, 74, 1.0) == 0.25
        assert predicted_rel_err_elementwise(reference, 1, 480, 1.0) == 0.0625

    def test_normwise(self, reference: MatrixHandle) -> None:
        assert predicted_rel_err_normwise(reference, 1000, 1.0) == pytest.approx(0.025)
        assert predicted_rel_err_normwise_printed(reference, 1000, 1.0) == pytest.approx(
            1400 / 52000
        )

    def test_doubling_samples_halves_prediction(self, reference: MatrixHandle) -> None:
        one = predicted_rel_err_elementwise(reference, 2, 100, 0.1)
        two = predicted_rel_err_elementwise(reference, 2, 200, 0.1)
        assert two == pytest.approx(one / 2)

    def test_zero_diagonal_entry_is_degenerate(self) -> None:
        with pytest.raises(DegenerateTargetError):
            predicted_rel_err_elementwise(ZERO_DIAGONAL, 1, 100, 1.0)
        with pytest.raises(DegenerateTargetError):
            predicted_rel_err_normwise(ZERO_DIAGONAL, 100, 1.0)

    def test_rejects_non_positive_samples(self, reference: MatrixHandle) -> None:
        with pytest.raises(InvalidArgumentError):
            predicted_rel_err_normwise(reference, 0, 1.0)

    @pytest.mark.parametrize("eps", [0.05, 0.3, 2.0])
    def test_plan_meets_its_target(self, reference: MatrixHandle, eps: float) -> None:
        for p, app in ((1, 2.0), (2, 3.0)):
            plan = sample_size_elementwise(reference, p, eps, 0.1)
            predicted = predicted_rel_err_elementwise(reference, p, plan.sample_size, 0.1)
            assert predicted * app**2 <= eps**2 * (1 + 1e-8)


class TestMonteCarlo:
    """Brute-force validators agree with the closed forms."""

    def test_zero_matrix_is_exactly_zero(self) -> None:
        M = MatrixHandle.from_dense(np.zeros((3, 3)))
        assert mc_total_variance(M, 1000, seed=1) == 0.0

    def test_variance_close_to_closed_form(self, reference: MatrixHandle) -> None:
        profile = mc_moment_profile(reference, 10**6, seed=5)
        assert profile.dim == 2
        assert profile.variance == pytest.approx([480.0, 820.0], rel=0.1)
        assert profile.moments[0] == pytest.approx([52.0, 52.0], rel=0.1)

    def test_identity_total_matches_direct_sum_not_printed(self) -> None:
        M = MatrixHandle.from_dense(np.eye(8))
        estimate = mc_total_variance(M, 10**6, seed=3)
        assert estimate == pytest.approx(2720.0, rel=0.05)
        assert abs(estimate - 2720.0) < abs(estimate - 3744.0)

    def test_same_seed_is_bitwise_identical(self, reference: MatrixHandle) -> None:
        first = mc_moment_profile(reference, 5000, seed=2)
        second = mc_moment_profile(reference, 5000, seed=2)
        assert np.array_equal(first.moments, second.moments)
        assert np.array_equal(first.variance, second.variance)

    def test_zeroth_moment_does_not_depend_on_index(self) -> None:
        M = MatrixHandle.from_dense(np.random.default_rng(1).standard_normal((6, 6)))
        profile = mc_moment_profile(M, 2000, seed=0)
        assert np.all(profile.moments[0] == profile.moments[0][0])

    def test_scalar_helpers_read_the_profile(self, reference: MatrixHandle) -> None:
        profile = mc_moment_profile(reference, 3000, seed=4)
        assert mc_variance_oracle(reference, 2, 3000, seed=4) == profile.variance[1]
        assert mc_moment(reference, 1, 2, 3000, seed=4) == profile.moments[2, 0]

    def test_rejects_bad_arguments(self, reference: MatrixHandle) -> None:
        with pytest.raises(InvalidArgumentError):
            mc_total_variance(reference, 0)
        with pytest.raises(InvalidArgumentError):
            mc_moment(reference, 1, 5, 100)
        with pytest.raises(InvalidArgumentError):
            mc_variance_oracle(reference, 3, 100)


def test_chebyshev_plan_holds_empirically(reference: MatrixHandle) -> None:
    """The eps = 1, delta = 1/4 plan fails on at most a quarter of seeds."""
    plan = sample_size_elementwise(reference, 1, 1.0, 0.25)
    assert plan.sample_size == 480

    oracle = explicit_oracle(reference)
    failures = sum(
        abs(estimate_diagonal(oracle, plan.sample_size, seed=seed, workers=1).values[0] - 2.0)
        > 1.0
        for seed in range(2000)
    )
    assert failures / 2000 <= 0.25
