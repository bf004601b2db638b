"""Predict service"""

from loguru import logger

from app.commands.helper import resolve_index
from app.constants import messages
from app.core.enums import PlanMode
from app.services.linalg import (
    MatrixHandle,
    cross_norm_sq,
    diag_entry,
    diag_sq_sum,
    frobenius_sq,
    row_norm_sq,
    sym_frobenius_sq,
    trace,
)
from app.services.matrixmarket import load_source, parse_source
from app.services.theory import (
    SamplePlan,
    sample_size_elementwise,
    sample_size_matvec_elementwise,
    sample_size_matvec_normwise,
    sample_size_median,
    sample_size_normwise,
    total_variance,
)

from .models import PredictRequest, PredictResult


class PredictService:
    """Computes sample plans for the five supported guarantees."""

    def run(self, request: PredictRequest) -> PredictResult:
        source = parse_source(request.matrix)
        matrix = load_source(source, seed=request.seed)
        plan, inputs = self.plan(matrix, request)
        logger.info(
            messages.PLAN_DONE.format(
                mode=plan.mode.value,
                label=source.label,
                sample_size=plan.sample_size,
                repeats=plan.repeats,
            )
        )
        return PredictResult(
            matrix=source.label, dim=matrix.dim, plan=plan, inputs=inputs
        )

    def plan(
        self, M: MatrixHandle, request: PredictRequest
    ) -> tuple[SamplePlan, dict[str, float]]:
        eps, delta, mode = request.eps, request.delta, request.mode

        if mode is PlanMode.NORMWISE:
            plan = sample_size_normwise(M, eps, delta)
            report = total_variance(M)
            return plan, {
                "trace": trace(M),
                "sym_frobenius_sq": sym_frobenius_sq(M),
                "diag_sq_sum": diag_sq_sum(M),
                "direct_sum": report.direct_sum,
                "printed_closed_form": report.printed_closed_form,
                "corrected_closed_form": report.corrected_closed_form,
            }
        if mode is PlanMode.MATVEC_NORMWISE:
            plan = sample_size_matvec_normwise(M, eps, delta)
            return plan, {
                "frobenius_sq": frobenius_sq(M),
                "diag_sq_sum": diag_sq_sum(M),
            }

        p = resolve_index(M, request.index)
        if mode is PlanMode.MATVEC_ELEMENTWISE:
            plan = sample_size_matvec_elementwise(M, p, eps, delta)
            return plan, {"row_norm_sq": row_norm_sq(M, p), "A_pp": diag_entry(M, p)}

        if mode is PlanMode.MEDIAN:
            plan = sample_size_median(M, p, eps, delta)
        else:
            plan = sample_size_elementwise(M, p, eps, delta)
        return plan, {
            "trace": trace(M),
            "sym_frobenius_sq": sym_frobenius_sq(M),
            "cross_norm_sq": cross_norm_sq(M, p),
            "A_pp": diag_entry(M, p),
            "V_p": plan.variance,
        }
