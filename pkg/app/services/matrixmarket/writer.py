"""Matrix Market writer (coordinate real general)."""

from __future__ import annotations

from pathlib import Path
from typing import BinaryIO

import numpy as np

from app.services.linalg import MatrixHandle, to_sparse

from .models import MatrixMarketHeader

# 17 significant digits round-trip every float64 exactly
VALUE_FORMAT = "%.17g"


def write_matrix_market(M: MatrixHandle, sink: BinaryIO, comment: str = "") -> None:
    """Write the stored entries of M in row-major order with 1-based indices."""
    csr = to_sparse(M).data
    coo = csr.tocoo()
    order = np.lexsort((coo.col, coo.row))

    lines = [MatrixMarketHeader().banner()]
    lines.extend(f"% {text}" for text in comment.splitlines())
    lines.append(f"{M.dim} {M.dim} {coo.nnz}")
    lines.extend(
        f"{i + 1} {j + 1} {VALUE_FORMAT % v}"
        for i, j, v in zip(coo.row[order], coo.col[order], coo.data[order])
    )
    sink.write(("\n".join(lines) + "\n").encode("ascii"))


def write_matrix_market_path(M: MatrixHandle, path: str | Path, comment: str = "") -> Path:
    location = Path(path)
    location.parent.mkdir(parents=True, exist_ok=True)
    with location.open("wb") as handle:
        write_matrix_market(M, handle, comment)
    return location
