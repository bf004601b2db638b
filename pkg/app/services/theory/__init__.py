"""Variance, moment and sample-size theory, with Monte Carlo validators."""

from .models import SamplePlan, VarianceReport
from .montecarlo import (
    MonteCarloProfile,
    mc_moment,
    mc_moment_profile,
    mc_total_variance,
    mc_variance_oracle,
    mc_variance_profile,
)
from .sample_size import (
    median_repeats,
    predicted_rel_err_elementwise,
    predicted_rel_err_normwise,
    predicted_rel_err_normwise_printed,
    sample_size_elementwise,
    sample_size_matvec_elementwise,
    sample_size_matvec_normwise,
    sample_size_median,
    sample_size_normwise,
)
from .variance import (
    corrected_closed_form_total,
    elementwise_variance,
    elementwise_variance_profile,
    moment_sq,
    printed_closed_form_total,
    total_variance,
)

__all__ = [
    "MonteCarloProfile",
    "SamplePlan",
    "VarianceReport",
    "corrected_closed_form_total",
    "elementwise_variance",
    "elementwise_variance_profile",
    "mc_moment",
    "mc_moment_profile",
    "mc_total_variance",
    "mc_variance_oracle",
    "mc_variance_profile",
    "median_repeats",
    "moment_sq",
    "predicted_rel_err_elementwise",
    "predicted_rel_err_normwise",
    "predicted_rel_err_normwise_printed",
    "printed_closed_form_total",
    "sample_size_elementwise",
    "sample_size_matvec_elementwise",
    "sample_size_matvec_normwise",
    "sample_size_median",
    "sample_size_normwise",
    "total_variance",
]
