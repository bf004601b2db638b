"""Synthetic test matrices and the `gauss:D | uniform:D | mm:PATH` loader."""

from __future__ import annotations

from pathlib import Path

from loguru import logger

from app.constants import messages
from app.core.enums import SourceScheme, StreamNamespace
from app.core.exceptions import InvalidArgumentError, MatrixSourceError
from app.services.linalg import GaussianStream, MatrixHandle

from .models import MatrixSource
from .reader import read_matrix_market_path


def _check_dim(d: int) -> None:
    if int(d) != d or d < 1:
        raise InvalidArgumentError(messages.NON_POSITIVE.format(name="d", value=d))


def gen_gaussian(d: int, seed: int) -> MatrixHandle:
    """Dense d x d matrix of i.i.d. N(0, 1) entries; row i is stream sample i."""
    _check_dim(d)
    stream = GaussianStream(seed, StreamNamespace.MATRIX)
    return MatrixHandle.from_dense(stream.block(0, d, d))


def gen_uniform01(d: int, seed: int) -> MatrixHandle:
    """Dense d x d matrix of i.i.d. Uniform(0, 1) entries."""
    _check_dim(d)
    stream = GaussianStream(seed, StreamNamespace.MATRIX)
    return MatrixHandle.from_dense(stream.uniform_block(0, d, d))


def parse_source(text: str) -> MatrixSource:
    """Split a source string into its scheme and argument."""
    scheme, sep, argument = text.partition(":")
    if not sep or not argument:
        raise MatrixSourceError(messages.UNKNOWN_SOURCE.format(value=text))
    try:
        kind = SourceScheme(scheme.lower())
    except ValueError as exc:
        raise MatrixSourceError(messages.UNKNOWN_SOURCE.format(value=text)) from exc

    if kind is SourceScheme.MM:
        return MatrixSource(scheme=kind, path=Path(argument).expanduser())
    if not argument.isdigit() or int(argument) < 1:
        raise MatrixSourceError(messages.UNKNOWN_SOURCE.format(value=text))
    return MatrixSource(scheme=kind, dim=int(argument))


def load_source(source: str | MatrixSource, seed: int = 0) -> MatrixHandle:
    """Materialize a matrix source; generated matrices are deterministic in seed."""
    resolved = parse_source(source) if isinstance(source, str) else source
    if resolved.scheme is SourceScheme.MM:
        assert resolved.path is not None
        matrix = read_matrix_market_path(resolved.path)
    elif resolved.scheme is SourceScheme.GAUSS:
        assert resolved.dim is not None
        matrix = gen_gaussian(resolved.dim, seed)
    else:
        assert resolved.dim is not None
        matrix = gen_uniform01(resolved.dim, seed)
    logger.info(f"Loaded {resolved.label}: {matrix!r}")
    return matrix
