"""Defines the exception hierarchy with exit codes for the command line."""

from typing import Any


class QuadformError(Exception):
    """Base exception with detailed attributes."""

    exit_code: int = 1

    def __init__(
        self,
        message: str = "",
        payload: Any = None,
        exit_code: int | None = None,
        error_log: str = "",
    ):
        super().__init__(message)
        self.payload = payload
        self.message = message
        if exit_code is not None:
            self.exit_code = exit_code
        self.error_log = error_log

    def __str__(self) -> str:
        return self.message

    def __repr__(self) -> str:
        return (
            f"{type(self).__name__}: {self.message} (Exit Code: {self.exit_code}, "
            f"Payload: {self.payload}, Error Log: {self.error_log})"
        )

    def to_dict(self) -> dict[str, Any]:
        """Return a dictionary representation of the exception."""
        return {
            "error": type(self).__name__,
            "message": self.message,
            "payload": self.payload,
            "exit_code": self.exit_code,
            "error_log": self.error_log,
        }


class InvalidArgumentError(QuadformError, ValueError):
    """A caller-supplied argument violates an operation's precondition."""

    exit_code = 1


class MatrixSourceError(QuadformError):
    """A matrix source could not be resolved or read."""

    exit_code = 2


class MatrixMarketParseError(MatrixSourceError):
    """Malformed Matrix Market content."""

    def __init__(self, message: str, line: int, **kwargs: Any) -> None:
        super().__init__(f"line {line}: {message}", payload={"line": line}, **kwargs)
        self.line = line


class UnsupportedShapeError(MatrixSourceError):
    """Matrix Market content declares a non-square matrix."""


class UnsupportedFieldError(MatrixSourceError):
    """Matrix Market content declares a complex or otherwise unsupported field."""


class DegenerateTargetError(QuadformError, ArithmeticError):
    """A relative error target is undefined because its denominator is zero."""

    exit_code = 3


class NumericError(QuadformError, ArithmeticError):
    """An oracle produced a non-finite value."""

    exit_code = 4
