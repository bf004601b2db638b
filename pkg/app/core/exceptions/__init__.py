"""Init module for Exceptions"""

from .base import (
    DegenerateTargetError,
    InvalidArgumentError,
    MatrixMarketParseError,
    MatrixSourceError,
    NumericError,
    QuadformError,
    UnsupportedFieldError,
    UnsupportedShapeError,
)
from .handle_exception import HandleExceptions

__all__ = [
    "DegenerateTargetError",
    "HandleExceptions",
    "InvalidArgumentError",
    "MatrixMarketParseError",
    "MatrixSourceError",
    "NumericError",
    "QuadformError",
    "UnsupportedFieldError",
    "UnsupportedShapeError",
]
