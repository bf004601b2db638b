"""Matrix storage, Gaussian streams and matrix functionals."""

from .gaussian import GaussianStream, sample_gaussian
from .matrix import (
    MatrixHandle,
    cross_norm_profile,
    cross_norm_sq,
    dense_array,
    diag,
    diag_entry,
    diag_sq_sum,
    frobenius_sq,
    mat_vec,
    mat_vec_batch,
    quad_form,
    quad_form_batch,
    row_norm_sq,
    sym_frobenius_sq,
    to_dense,
    to_sparse,
    trace,
)

__all__ = [
    "GaussianStream",
    "MatrixHandle",
    "cross_norm_profile",
    "cross_norm_sq",
    "dense_array",
    "diag",
    "diag_entry",
    "diag_sq_sum",
    "frobenius_sq",
    "mat_vec",
    "mat_vec_batch",
    "quad_form",
    "quad_form_batch",
    "row_norm_sq",
    "sample_gaussian",
    "sym_frobenius_sq",
    "to_dense",
    "to_sparse",
    "trace",
]
