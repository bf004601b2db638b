"""Sample-size plans and predicted relative errors.

Every plan is a ceiling floored at 1, and every log is natural.
"""

from __future__ import annotations

import math

from app.constants import messages
from app.core.enums import PlanMode
from app.core.exceptions import DegenerateTargetError, InvalidArgumentError
from app.services.linalg import (
    MatrixHandle,
    diag_entry,
    diag_sq_sum,
    frobenius_sq,
    row_norm_sq,
)

from .models import SamplePlan
from .variance import elementwise_variance, printed_closed_form_total, total_variance

# quotients are rounded to this many significant digits before the ceiling
_PLAN_DIGITS = 12


def _ceil_plan(value: float) -> int:
    if not math.isfinite(value):
        raise InvalidArgumentError(messages.PLAN_TOO_LARGE.format(value=value))
    return max(1, math.ceil(float(f"{value:.{_PLAN_DIGITS}g}")))


def _check_target(eps: float, delta: float) -> None:
    if not eps > 0:
        raise InvalidArgumentError(messages.INVALID_EPSILON.format(value=eps))
    if not 0 < delta < 1:
        raise InvalidArgumentError(messages.INVALID_DELTA.format(value=delta))


def _check_prediction(sample_size: int, delta: float) -> None:
    if sample_size < 1:
        raise InvalidArgumentError(
            messages.NON_POSITIVE.format(name="N", value=sample_size)
        )
    if not delta > 0:
        raise InvalidArgumentError(messages.INVALID_DELTA_PREDICTION.format(value=delta))


def _nonzero_diagonal_entry(M: MatrixHandle, p: int) -> float:
    app = diag_entry(M, p)
    if app == 0:
        raise DegenerateTargetError(messages.ZERO_DIAGONAL_ENTRY.format(p=p))
    return app


def _nonzero_diagonal(M: MatrixHandle) -> float:
    diag_sq = diag_sq_sum(M)
    if diag_sq == 0:
        raise DegenerateTargetError(messages.ZERO_DIAGONAL)
    return diag_sq


def median_repeats(delta: float) -> int:
    """T = max(1, ceil(8 ln(1/delta)))."""
    if not 0 < delta < 1:
        raise InvalidArgumentError(messages.INVALID_DELTA.format(value=delta))
    return _ceil_plan(8.0 * math.log(1.0 / delta))


def sample_size_elementwise(
    M: MatrixHandle, p: int, eps: float, delta: float
) -> SamplePlan:
    """Chebyshev plan: |g_p - A_pp| <= eps with probability >= 1 - delta."""
    _check_target(eps, delta)
    variance = elementwise_variance(M, p)
    return SamplePlan(
        mode=PlanMode.ELEMENTWISE,
        eps=eps,
        delta=delta,
        sample_size=_ceil_plan(variance / (4.0 * delta) / eps / eps),
        index=p,
        variance=variance,
    )


def sample_size_normwise(M: MatrixHandle, eps: float, delta: float) -> SamplePlan:
    """Plan for ||g - diag(A)||^2 <= eps * sum_i A_ii^2 with probability >= 1 - delta.

    Uses the direct-sum aggregate variance, not the printed closed form.
    """
    _check_target(eps, delta)
    diag_sq = _nonzero_diagonal(M)
    variance = total_variance(M).direct_sum
    return SamplePlan(
        mode=PlanMode.NORMWISE,
        eps=eps,
        delta=delta,
        sample_size=_ceil_plan(variance / (4.0 * delta) / diag_sq / eps),
        variance=variance,
    )


def sample_size_median(M: MatrixHandle, p: int, eps: float, delta: float) -> SamplePlan:
    """Median-of-repeats plan: N' = V_p / eps^2 per repeat, T = 8 ln(1/delta)."""
    _check_target(eps, delta)
    variance = elementwise_variance(M, p)
    return SamplePlan(
        mode=PlanMode.MEDIAN,
        eps=eps,
        delta=delta,
        sample_size=_ceil_plan(variance / eps / eps),
        repeats=median_repeats(delta),
        index=p,
        variance=variance,
    )


def sample_size_matvec_elementwise(
    M: MatrixHandle, p: int, eps: float, delta: float
) -> SamplePlan:
    """Matrix-vector baseline: N' = 2 (||A_{p,:}||^2 - A_pp^2) ln(2/delta) / eps^2."""
    _check_target(eps, delta)
    off_row = row_norm_sq(M, p) - diag_entry(M, p) ** 2
    return SamplePlan(
        mode=PlanMode.MATVEC_ELEMENTWISE,
        eps=eps,
        delta=delta,
        sample_size=_ceil_plan(2.0 * off_row * math.log(2.0 / delta) / eps / eps),
        index=p,
        variance=off_row,
    )


def sample_size_matvec_normwise(M: MatrixHandle, eps: float, delta: float) -> SamplePlan:
    """Matrix-vector baseline: (||A||^2 - sum A_ii^2) / (eps sum A_ii^2) * ln(1/delta)."""
    _check_target(eps, delta)
    diag_sq = _nonzero_diagonal(M)
    off_diag = frobenius_sq(M) - diag_sq
    return SamplePlan(
        mode=PlanMode.MATVEC_NORMWISE,
        eps=eps,
        delta=delta,
        sample_size=_ceil_plan(off_diag / diag_sq / eps * math.log(1.0 / delta)),
        variance=off_diag,
    )


def predicted_rel_err_elementwise(
    M: MatrixHandle, p: int, sample_size: int, delta: float
) -> float:
    """V_p / (4 delta N A_pp^2); with delta = 1 this is the expected error."""
    _check_prediction(sample_size, delta)
    app = _nonzero_diagonal_entry(M, p)
    return elementwise_variance(M, p) / (4.0 * delta * sample_size * app**2)


def predicted_rel_err_normwise(M: MatrixHandle, sample_size: int, delta: float) -> float:
    """Direct-sum variance / (4 N delta sum_i A_ii^2)."""
    _check_prediction(sample_size, delta)
    diag_sq = _nonzero_diagonal(M)
    return total_variance(M).direct_sum / (4.0 * sample_size * delta * diag_sq)


def predicted_rel_err_normwise_printed(
    M: MatrixHandle, sample_size: int, delta: float
) -> float:
    """Same prediction with the printed (4d + 16) aggregate; for comparison only."""
    _check_prediction(sample_size, delta)
    diag_sq = _nonzero_diagonal(M)
    return printed_closed_form_total(M) / (4.0 * sample_size * delta * diag_sq)
