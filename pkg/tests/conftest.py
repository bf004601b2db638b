"""Shared fixtures: reference matrices, Matrix Market files and a CLI runner."""

from collections.abc import Callable
from pathlib import Path

import numpy as np
import pytest

from app.services.linalg import MatrixHandle, to_sparse
from main import main

REFERENCE = [[2.0, 1.0], [0.0, 3.0]]


def make_battery() -> dict[str, MatrixHandle]:
    """Gaussian, uniform, diagonal, symmetric and sparse matrices, d in {1, 2, 5, 8}."""
    rng = np.random.default_rng(20240611)
    symmetric = rng.standard_normal((5, 5))
    sparse_dense = rng.standard_normal((8, 8)) * (rng.random((8, 8)) < 0.3)
    np.fill_diagonal(sparse_dense, rng.standard_normal(8))
    return {
        "scalar": MatrixHandle.from_dense([[1.0]]),
        "reference": MatrixHandle.from_dense(REFERENCE),
        "gaussian-5": MatrixHandle.from_dense(rng.standard_normal((5, 5))),
        "uniform-8": MatrixHandle.from_dense(rng.random((8, 8))),
        "diagonal-5": MatrixHandle.from_dense(np.diag(rng.standard_normal(5))),
        "symmetric-5": MatrixHandle.from_dense(symmetric + symmetric.T),
        "sparse-8": to_sparse(MatrixHandle.from_dense(sparse_dense)),
    }


@pytest.fixture
def reference() -> MatrixHandle:
    """The 2x2 matrix [[2, 1], [0, 3]] most worked examples use."""
    return MatrixHandle.from_dense(REFERENCE)


@pytest.fixture(params=list(make_battery()), ids=str)
def battery_matrix(request: pytest.FixtureRequest) -> MatrixHandle:
    return make_battery()[request.param]


@pytest.fixture
def write_mtx(tmp_path: Path) -> Callable[[str, str], Path]:
    """Write Matrix Market text to tmp_path/name and return the path."""

    def _write(text: str, name: str = "matrix.mtx") -> Path:
        path = tmp_path / name
        path.write_text(text)
        return path

    return _write


@pytest.fixture
def reference_mtx(write_mtx: Callable[[str, str], Path]) -> Path:
    return write_mtx(
        "%%MatrixMarket matrix coordinate real general\n"
        "2 2 3\n"
        "1 1 2\n"
        "1 2 1\n"
        "2 2 3\n",
        "reference.mtx",
    )


@pytest.fixture
def run_cli(capsys: pytest.CaptureFixture[str]) -> Callable[..., tuple[int, str]]:
    """Run the command line in-process, returning (exit code, stdout)."""

    def _run(*argv: str) -> tuple[int, str]:
        code = main(list(argv))
        return code, capsys.readouterr().out

    return _run
