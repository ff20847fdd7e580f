"""
A TRACE level below DEBUG for per-graph chatter in hot loops

Library code logs with logger.log(TRACE, ...) so it never depends on installation;
install() additionally registers the level name plus logging.trace and Logger.trace
"""

from threading import Lock
import logging


TRACE: int = logging.DEBUG // 2

_lock = Lock()
_installed: int | None = None


def install(*, value: int = TRACE, force: bool = False) -> None:
    """
    :param value: The numeric TRACE level, strictly between 0 and DEBUG
    :param force: Skip the conflict checks and reinstall
    :raises ValueError: if value is out of range
    :raises RuntimeError: if already installed
    :raises AttributeError: if logging already defines a conflicting TRACE or trace
    """
    global _installed  # pylint: disable=global-statement
    with _lock:
        if not force:
            _check(value)
        logging.addLevelName(value, "TRACE")
        setattr(logging, "TRACE", value)

        def module_trace(msg, *args, **kwargs) -> None:
            """
            Log 'msg % args' with severity 'TRACE' on the root logger
            """
            logging.log(value, msg, *args, **kwargs)

        def logger_trace(self, msg, *args, **kwargs) -> None:
            """
            Log 'msg % args' with severity 'TRACE'
            """
            if self.isEnabledFor(value):
                self._log(value, msg, args, **kwargs)  # pylint: disable=protected-access

        setattr(logging, "trace", module_trace)
        setattr(logging.getLoggerClass(), "trace", logger_trace)
        _installed = value


def ensure_installed() -> int:
    """
    Idempotent install for entry points
    :return: The installed TRACE level
    """
    with _lock:
        current = _installed
    if current is None:
        install(force=True)
        return TRACE
    return current


def _check(value: int) -> None:
    if not 0 < value < logging.DEBUG:
        raise ValueError(f"value should be within: 0 < value < {logging.DEBUG}")
    if _installed is not None:
        raise RuntimeError("TRACE is already installed")
    for owner, attr in ((logging, "TRACE"), (logging, "trace"), (logging.getLoggerClass(), "trace")):
        if hasattr(owner, attr):
            raise AttributeError(f"{getattr(owner, '__name__', owner)} already defines {attr}")
