"""Exceptions"""

from collections.abc import Callable
from typing import Any

from loguru import logger
from pydantic import ValidationError

from app.constants import messages
from app.core.exceptions.base import QuadformError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2


class HandleExceptions:
    """Maps exceptions raised by a command to process exit codes."""

    def __init__(self, command: Callable[..., Any]):
        """Wrap a command callable."""
        self.command = command

    def __call__(self, *args: Any, **kwargs: Any) -> int:
        """Run the command and translate failures into an exit code."""
        try:
            self.command(*args, **kwargs)
        except QuadformError as exc:
            logger.debug(messages.ERROR_DETAIL.format(detail=exc.to_dict()))
            return self._report(exc.exit_code, exc.message, exc.error_log or None)
        except ValidationError as exc:
            details = "; ".join(
                f"{'.'.join(str(part) for part in error['loc'])}: {error['msg']}"
                for error in exc.errors()
            )
            return self._report(EXIT_USAGE, f"{messages.USAGE_ERROR}: {details}")
        except OSError as exc:
            return self._report(EXIT_IO, str(exc))
        except Exception as exc:
            logger.exception(f"{messages.INTERNAL_ERROR}: {exc}")
            return EXIT_USAGE
        return EXIT_OK

    @staticmethod
    def _report(exit_code: int, message: str, error_log: Any = None) -> int:
        """Log the failure once, centrally, and return its exit code."""
        if error_log:
            logger.error(f"{message} ({error_log})")
        else:
            logger.error(message)
        return exit_code
