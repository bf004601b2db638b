"""Global logging configuration with run ID and structured format."""

import sys
import uuid
from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar

from loguru import logger

from app.core.config import settings
from app.core.enums import AppEnvs

# Context variable to store run_id per CLI invocation
run_id_ctx_var: ContextVar[str | None] = ContextVar("run_id", default=None)


def configure_logger(level: str | None = None) -> None:
    """Configure global logger with structured format.

    Logs go to stderr; stdout carries command output only.
    """
    logger.remove()

    log_format = (
        "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | "
        "<level>{level: <8}</level> | "
        "run_id={extra[run_id]} | "
        "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
        "<level>{message}</level>"
    )

    logger.add(
        sys.stderr,
        format=log_format,
        level=(level or settings.LOG_LEVEL.value).upper(),
        backtrace=True,
        diagnose=settings.ENVIRONMENT.value == AppEnvs.LOCAL.value,
    )

    # Bind default run_id so it always exists
    logger.configure(extra={"run_id": "N/A"})


@contextmanager
def run_context() -> Iterator[str]:
    """Tag every log line emitted inside the block with a fresh run ID."""
    run_id = uuid.uuid4().hex[:12]
    token = run_id_ctx_var.set(run_id)
    try:
        with logger.contextualize(run_id=run_id):
            yield run_id
    finally:
        run_id_ctx_var.reset(token)


# Initialize global logger
configure_logger()


__all__ = ["logger", "configure_logger", "run_context", "run_id_ctx_var"]
