"""Matrix-vector oracle u -> A u used by the baseline estimator."""

from __future__ import annotations

import numpy as np

from app.services.linalg import MatrixHandle, mat_vec, mat_vec_batch


class MatVecOracle:
    """Black box returning A u; strictly more informative than a quadratic form."""

    concurrency_safe = True

    def __init__(self, matrix: MatrixHandle) -> None:
        self.matrix = matrix
        self.dim = matrix.dim

    def __call__(self, u: np.ndarray) -> np.ndarray:
        return mat_vec(self.matrix, u)

    def apply_batch(self, U: np.ndarray) -> np.ndarray:
        """Row i of the result is A U[i]."""
        return mat_vec_batch(self.matrix, U)


def matvec_oracle(matrix: MatrixHandle) -> MatVecOracle:
    return MatVecOracle(matrix)
