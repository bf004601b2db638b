"""Closed-form second moments and variances of the quadratic-form estimator.

With u ~ N(0, I_d), q = u^T A u and the single-sample residual
r_p = q u_p^2 - q - 2 A_pp:

    V_p = E[r_p^2] = 2 (tr A + 4 A_pp)^2 + ||A + A^T||^2
                     + 8 ||A_{p,:} + A_{:,p}||^2 - 12 A_pp^2

Off-diagonal sums over i > j are expressed through ||A + A^T||^2 and the cross
norms, so nothing here is O(d^2) beyond forming A + A^T once.
"""

from __future__ import annotations

import numpy as np

from app.constants import messages
from app.core.exceptions import InvalidArgumentError
from app.services.linalg import (
    MatrixHandle,
    cross_norm_profile,
    diag,
    diag_entry,
    diag_sq_sum,
    sym_frobenius_sq,
    trace,
)

from .models import VarianceReport


def _check_index(M: MatrixHandle, p: int) -> None:
    if not 1 <= p <= M.dim:
        raise InvalidArgumentError(messages.INDEX_OUT_OF_RANGE.format(p=p, d=M.dim))


def elementwise_variance_profile(M: MatrixHandle) -> np.ndarray:
    """V_p for every p, as one vector."""
    tr = trace(M)
    diagonal = diag(M)
    return (
        2.0 * np.square(tr + 4.0 * diagonal)
        + sym_frobenius_sq(M)
        + 8.0 * cross_norm_profile(M)
        - 12.0 * np.square(diagonal)
    )


def elementwise_variance(M: MatrixHandle, p: int) -> float:
    _check_index(M, p)
    return float(elementwise_variance_profile(M)[p - 1])


def printed_closed_form_total(M: MatrixHandle) -> float:
    """(4d + 16) tr^2 + (d + 8) ||A + A^T||^2 + 20 sum A_ii^2, as printed."""
    d = M.dim
    return (
        (4 * d + 16) * trace(M) ** 2
        + (d + 8) * sym_frobenius_sq(M)
        + 20.0 * diag_sq_sum(M)
    )


def corrected_closed_form_total(M: MatrixHandle) -> float:
    """(2d + 16) tr^2 + (d + 8) ||A + A^T||^2 + 20 sum A_ii^2."""
    d = M.dim
    return (
        (2 * d + 16) * trace(M) ** 2
        + (d + 8) * sym_frobenius_sq(M)
        + 20.0 * diag_sq_sum(M)
    )


def total_variance(M: MatrixHandle) -> VarianceReport:
    """Aggregate variance as the direct sum of V_p, with both closed forms."""
    profile = elementwise_variance_profile(M)
    return VarianceReport(
        dim=M.dim,
        per_index=profile.tolist(),
        direct_sum=float(profile.sum()),
        printed_closed_form=printed_closed_form_total(M),
        corrected_closed_form=corrected_closed_form_total(M),
    )


def moment_sq(M: MatrixHandle, p: int, n: int) -> float:
    """E[(u^T A u * u_p^n)^2] for n in {0, 1, 2}; p is ignored for n = 0."""
    if n not in (0, 1, 2):
        raise InvalidArgumentError(messages.INVALID_MOMENT_ORDER.format(value=n))
    _check_index(M, p)

    tr = trace(M)
    diag_sq = diag_sq_sum(M)
    app = diag_entry(M, p)
    # sum_{i>j} (A_ij + A_ji)^2
    off_diag = (sym_frobenius_sq(M) - 4.0 * diag_sq) / 2.0
    # the two p-restricted sums of the same kind
    off_diag_p = float(cross_norm_profile(M)[p - 1]) - 4.0 * app**2

    base = tr**2 + 2.0 * diag_sq + off_diag
    if n == 0:
        return base
    if n == 1:
        return base + 4.0 * app * tr + 8.0 * app**2 + 2.0 * off_diag_p
    return 3.0 * base + 24.0 * app * tr + 72.0 * app**2 + 12.0 * off_diag_p
