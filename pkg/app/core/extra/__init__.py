"""Initialize extra modules."""

from .logger import configure_logger, run_context, run_id_ctx_var

__all__ = [
    "configure_logger",
    "run_context",
    "run_id_ctx_var",
]
