"""Square-matrix storage and the scalar functionals the estimators consume.

Indices taken by the public functions are 1-based; storage is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy import sparse

from app.constants import messages
from app.core.enums import StorageKind
from app.core.exceptions import InvalidArgumentError

Storage = Union[np.ndarray, sparse.csr_matrix]


@dataclass(frozen=True, eq=False)
class MatrixHandle:
    """Immutable square float64 matrix, dense or CSR."""

    data: Storage

    def __post_init__(self) -> None:
        shape = self.data.shape
        if len(shape) != 2 or shape[0] != shape[1]:
            raise InvalidArgumentError(messages.NOT_SQUARE.format(shape=shape))
        if shape[0] < 1:
            raise InvalidArgumentError(messages.EMPTY_MATRIX)

    @classmethod
    def from_dense(cls, values: np.ndarray | list[list[float]]) -> MatrixHandle:
        array = np.array(values, dtype=np.float64)
        if array.ndim != 2:
            raise InvalidArgumentError(messages.NOT_SQUARE.format(shape=array.shape))
        array.setflags(write=False)
        return cls(array)

    @classmethod
    def from_coo(
        cls,
        d: int,
        rows: np.ndarray,
        cols: np.ndarray,
        values: np.ndarray,
    ) -> MatrixHandle:
        """Assemble sparse storage from 0-based triplets; duplicates are summed."""
        if d < 1:
            raise InvalidArgumentError(messages.EMPTY_MATRIX)
        coo = sparse.coo_matrix(
            (np.asarray(values, dtype=np.float64), (rows, cols)), shape=(d, d)
        )
        csr = coo.tocsr()
        csr.sum_duplicates()
        csr.sort_indices()
        return cls(csr)

    @property
    def dim(self) -> int:
        return int(self.data.shape[0])

    @property
    def kind(self) -> StorageKind:
        return StorageKind.SPARSE if sparse.issparse(self.data) else StorageKind.DENSE

    @property
    def nnz(self) -> int:
        if self.kind is StorageKind.SPARSE:
            return int(self.data.nnz)
        return int(np.count_nonzero(self.data))

    def __repr__(self) -> str:
        return f"MatrixHandle(dim={self.dim}, kind={self.kind.value}, nnz={self.nnz})"


def to_dense(M: MatrixHandle) -> MatrixHandle:
    if M.kind is StorageKind.DENSE:
        return M
    return MatrixHandle.from_dense(M.data.toarray())


def to_sparse(M: MatrixHandle) -> MatrixHandle:
    if M.kind is StorageKind.SPARSE:
        return M
    rows, cols = np.nonzero(M.data)
    return MatrixHandle.from_coo(M.dim, rows, cols, M.data[rows, cols])


def dense_array(M: MatrixHandle) -> np.ndarray:
    """Dense ndarray view (a copy for sparse storage)."""
    if M.kind is StorageKind.SPARSE:
        return np.asarray(M.data.toarray())
    return np.asarray(M.data)


def _check_vector(M: MatrixHandle, u: np.ndarray) -> np.ndarray:
    vector = np.asarray(u, dtype=np.float64)
    if vector.ndim != 1 or vector.shape[0] != M.dim:
        raise InvalidArgumentError(
            messages.DIMENSION_MISMATCH.format(got=vector.shape, expected=M.dim)
        )
    return vector


def _check_batch(M: MatrixHandle, U: np.ndarray) -> np.ndarray:
    batch = np.asarray(U, dtype=np.float64)
    if batch.ndim != 2 or batch.shape[1] != M.dim:
        raise InvalidArgumentError(
            messages.DIMENSION_MISMATCH.format(got=batch.shape, expected=M.dim)
        )
    return batch


def _index(M: MatrixHandle, p: int) -> int:
    if not 1 <= p <= M.dim:
        raise InvalidArgumentError(messages.INDEX_OUT_OF_RANGE.format(p=p, d=M.dim))
    return p - 1


def mat_vec(M: MatrixHandle, u: np.ndarray) -> np.ndarray:
    """Return A u."""
    vector = _check_vector(M, u)
    return np.asarray(M.data @ vector, dtype=np.float64).ravel()


def mat_vec_batch(M: MatrixHandle, U: np.ndarray) -> np.ndarray:
    """Row i of the result is A U[i]."""
    batch = _check_batch(M, U)
    if M.kind is StorageKind.SPARSE:
        return np.asarray(M.data @ batch.T).T
    return batch @ M.data.T


def quad_form(M: MatrixHandle, u: np.ndarray) -> float:
    """Return sum_ij A_ij u_i u_j; O(nnz) for sparse storage."""
    vector = _check_vector(M, u)
    return float(vector @ np.asarray(M.data @ vector).ravel())


def quad_form_batch(M: MatrixHandle, U: np.ndarray) -> np.ndarray:
    """Quadratic forms of every row of U."""
    batch = _check_batch(M, U)
    return np.einsum("ij,ij->i", batch, mat_vec_batch(M, batch))


def diag(M: MatrixHandle) -> np.ndarray:
    return np.asarray(M.data.diagonal(), dtype=np.float64)


def trace(M: MatrixHandle) -> float:
    return float(diag(M).sum())


def diag_sq_sum(M: MatrixHandle) -> float:
    """Sum of squared diagonal entries."""
    return float(np.square(diag(M)).sum())


def frobenius_sq(M: MatrixHandle) -> float:
    if M.kind is StorageKind.SPARSE:
        return float(np.square(M.data.data).sum())
    return float(np.square(M.data).sum())


def sym_frobenius_sq(M: MatrixHandle) -> float:
    """Squared Frobenius norm of A + A^T."""
    if M.kind is StorageKind.SPARSE:
        symmetric = sparse.csr_matrix(M.data + M.data.T)
        return float(np.square(symmetric.data).sum())
    return float(np.square(M.data + M.data.T).sum())


def _row(M: MatrixHandle, i: int) -> np.ndarray:
    if M.kind is StorageKind.SPARSE:
        return np.asarray(M.data[[i], :].toarray()).ravel()
    return np.asarray(M.data[i, :])


def _col(M: MatrixHandle, i: int) -> np.ndarray:
    if M.kind is StorageKind.SPARSE:
        return np.asarray(M.data[:, [i]].toarray()).ravel()
    return np.asarray(M.data[:, i])


def cross_norm_sq(M: MatrixHandle, p: int) -> float:
    """Squared norm of row p (as a vector) plus column p."""
    i = _index(M, p)
    return float(np.square(_row(M, i) + _col(M, i)).sum())


def cross_norm_profile(M: MatrixHandle) -> np.ndarray:
    """cross_norm_sq for every index at once: row sums of (A + A^T) squared."""
    if M.kind is StorageKind.SPARSE:
        symmetric = sparse.csr_matrix(M.data + M.data.T)
        return np.asarray(symmetric.multiply(symmetric).sum(axis=1)).ravel()
    return np.square(M.data + M.data.T).sum(axis=1)


def row_norm_sq(M: MatrixHandle, p: int) -> float:
    """Squared Euclidean norm of row p."""
    i = _index(M, p)
    return float(np.square(_row(M, i)).sum())


def diag_entry(M: MatrixHandle, p: int) -> float:
    return float(diag(M)[_index(M, p)])
