"""Matrix Market reader for square real, integer and pattern matrices."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from pathlib import Path

import numpy as np
from loguru import logger
from pydantic import ValidationError

from app.constants import messages
from app.core.enums import MMField, MMFormat, MMSymmetry
from app.core.exceptions import (
    MatrixMarketParseError,
    MatrixSourceError,
    UnsupportedFieldError,
    UnsupportedShapeError,
)
from app.services.linalg import MatrixHandle, to_sparse

from .models import MatrixMarketHeader

BANNER = "%%matrixmarket"


def _decode(raw: bytes | str, lineno: int) -> str:
    if isinstance(raw, str):
        return raw
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise MatrixMarketParseError(str(exc), line=lineno) from exc


def parse_header(line: str, lineno: int = 1) -> MatrixMarketHeader:
    tokens = line.strip().lower().split()
    if len(tokens) != 5 or tokens[0] != BANNER:
        raise MatrixMarketParseError(messages.MM_BAD_BANNER, line=lineno)
    _, obj, fmt, field, symmetry = tokens
    if field == "complex":
        raise UnsupportedFieldError(
            messages.MM_COMPLEX_FIELD.format(value=field), payload={"line": lineno}
        )
    try:
        return MatrixMarketHeader(
            object=obj, format=fmt, field=field, symmetry=symmetry
        )
    except ValidationError as exc:
        raise MatrixMarketParseError(
            messages.MM_BAD_HEADER.format(value=" ".join(tokens[1:])), line=lineno
        ) from exc


def _data_lines(lines: Iterator[tuple[int, str]]) -> Iterator[tuple[int, list[str]]]:
    """Skip '%' comments and blank lines, yielding whitespace-split tokens."""
    for lineno, text in lines:
        stripped = text.strip()
        if not stripped or stripped.startswith("%"):
            continue
        yield lineno, stripped.split()


def _parse_int(token: str, lineno: int, message: str) -> int:
    try:
        return int(token)
    except ValueError as exc:
        raise MatrixMarketParseError(message, line=lineno) from exc


def _parse_value(token: str, field: MMField, lineno: int) -> float:
    try:
        if field is MMField.INTEGER:
            return float(int(token))
        return float(token)
    except ValueError as exc:
        raise MatrixMarketParseError(messages.MM_BAD_ENTRY, line=lineno) from exc


def _size(tokens: list[str], lineno: int, header: MatrixMarketHeader) -> tuple[int, int]:
    """Return (d, declared entry count) from the size line."""
    expected = 3 if header.format is MMFormat.COORDINATE else 2
    if len(tokens) != expected:
        raise MatrixMarketParseError(messages.MM_BAD_SIZE_LINE, line=lineno)
    numbers = [_parse_int(t, lineno, messages.MM_BAD_SIZE_LINE) for t in tokens]
    rows, cols = numbers[0], numbers[1]
    if rows < 1 or cols < 1 or (expected == 3 and numbers[2] < 0):
        raise MatrixMarketParseError(messages.MM_BAD_SIZE_LINE, line=lineno)
    if rows != cols:
        raise UnsupportedShapeError(
            messages.MM_NON_SQUARE.format(rows=rows, cols=cols),
            payload={"rows": rows, "cols": cols, "line": lineno},
        )
    if expected == 3:
        return rows, numbers[2]
    if header.symmetry is MMSymmetry.GENERAL:
        return rows, rows * rows
    if header.symmetry is MMSymmetry.SYMMETRIC:
        return rows, rows * (rows + 1) // 2
    return rows, rows * (rows - 1) // 2


def _read_coordinate(
    lines: Iterator[tuple[int, list[str]]],
    header: MatrixMarketHeader,
    d: int,
    count: int,
    last_line: int,
) -> MatrixHandle:
    width = 2 if header.field is MMField.PATTERN else 3
    rows: list[int] = []
    cols: list[int] = []
    values: list[float] = []
    found = 0

    for lineno, tokens in lines:
        last_line = lineno
        if len(tokens) != width:
            raise MatrixMarketParseError(messages.MM_BAD_ENTRY, line=lineno)
        i = _parse_int(tokens[0], lineno, messages.MM_BAD_ENTRY)
        j = _parse_int(tokens[1], lineno, messages.MM_BAD_ENTRY)
        if not (1 <= i <= d and 1 <= j <= d):
            raise MatrixMarketParseError(
                messages.MM_ENTRY_OUT_OF_RANGE.format(i=i, j=j, d=d), line=lineno
            )
        if i == j and header.symmetry is MMSymmetry.SKEW_SYMMETRIC:
            raise MatrixMarketParseError(
                messages.MM_SKEW_DIAGONAL.format(i=i), line=lineno
            )
        value = 1.0 if width == 2 else _parse_value(tokens[2], header.field, lineno)
        found += 1

        rows.append(i - 1)
        cols.append(j - 1)
        values.append(value)
        if i != j and header.symmetry is MMSymmetry.SYMMETRIC:
            rows.append(j - 1)
            cols.append(i - 1)
            values.append(value)
        elif i != j and header.symmetry is MMSymmetry.SKEW_SYMMETRIC:
            rows.append(j - 1)
            cols.append(i - 1)
            values.append(-value)

    if found != count:
        raise MatrixMarketParseError(
            messages.MM_ENTRY_COUNT.format(expected=count, found=found),
            line=last_line,
        )
    return MatrixHandle.from_coo(
        d,
        np.asarray(rows, dtype=np.int64),
        np.asarray(cols, dtype=np.int64),
        np.asarray(values, dtype=np.float64),
    )


def _read_array(
    lines: Iterator[tuple[int, list[str]]],
    header: MatrixMarketHeader,
    d: int,
    count: int,
    last_line: int,
) -> MatrixHandle:
    flat: list[float] = []
    for lineno, tokens in lines:
        last_line = lineno
        flat.extend(_parse_value(token, header.field, lineno) for token in tokens)
    if len(flat) != count:
        raise MatrixMarketParseError(
            messages.MM_ENTRY_COUNT.format(expected=count, found=len(flat)),
            line=last_line,
        )

    values = np.asarray(flat, dtype=np.float64)
    if header.symmetry is MMSymmetry.GENERAL:
        # array values are column-major
        dense = values.reshape(d, d).T
    else:
        # lower triangle, column by column; skew storage omits the diagonal
        skew = header.symmetry is MMSymmetry.SKEW_SYMMETRIC
        cols, rows = np.triu_indices(d, k=1 if skew else 0)
        dense = np.zeros((d, d), dtype=np.float64)
        dense[cols, rows] = -values if skew else values
        dense[rows, cols] = values
    return to_sparse(MatrixHandle.from_dense(dense))


def read_matrix_market(source: Iterable[bytes] | Iterable[str]) -> MatrixHandle:
    """
    Parse Matrix Market content into a sparse matrix handle.

    Args:
        source: Binary stream (or any iterable of lines) holding the file.

    Returns:
        Sparse MatrixHandle. Symmetric storage is mirrored, skew-symmetric
        storage is mirrored with negated values, duplicates are summed and
        pattern entries read as 1.0.

    Raises:
        MatrixMarketParseError: Malformed banner, size line or entry, with the
            1-based line number.
        UnsupportedShapeError: Non-square size line.
        UnsupportedFieldError: Complex field.
    """
    lines = ((n, _decode(raw, n)) for n, raw in enumerate(source, start=1))

    first = next(lines, None)
    if first is None:
        raise MatrixMarketParseError(messages.MM_BAD_BANNER, line=1)
    header = parse_header(first[1], first[0])

    data = _data_lines(lines)
    size = next(data, None)
    if size is None:
        raise MatrixMarketParseError(messages.MM_BAD_SIZE_LINE, line=first[0] + 1)
    size_line, size_tokens = size
    d, count = _size(size_tokens, size_line, header)

    read = _read_coordinate if header.format is MMFormat.COORDINATE else _read_array
    matrix = read(data, header, d, count, size_line)
    logger.debug(f"Read Matrix Market {header.banner()!r}: d={d}, nnz={matrix.nnz}")
    return matrix


def read_matrix_market_path(path: str | Path) -> MatrixHandle:
    """Open and parse a Matrix Market file; I/O failures become MatrixSourceError."""
    location = Path(path)
    try:
        with location.open("rb") as handle:
            return read_matrix_market(handle)
    except OSError as exc:
        raise MatrixSourceError(
            messages.UNREADABLE_SOURCE.format(path=location, reason=exc.strerror),
            payload={"path": str(location)},
            error_log=repr(exc),
        ) from exc
