import json
import logging
import time
from contextlib import contextmanager
from typing import Any, Iterator

_FORMAT = "%(message)s"


def get_logger(area: str) -> logging.Logger:
    """Logger `torslab.<area>` emitting one JSON document per line on stderr."""
    log = logging.getLogger(f"torslab.{area}")
    root = logging.getLogger("torslab")
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(_FORMAT))
        root.addHandler(handler)
        root.setLevel(logging.WARNING)
        root.propagate = False
    return log


def set_log_level(level: str) -> None:
    logging.getLogger("torslab").setLevel(level)


def log_event(log: logging.Logger, event: str, level: int = logging.INFO, **fields: Any) -> None:
    if not log.isEnabledFor(level):
        return
    payload = {"ts": time.time(), "event": event}
    payload.update(fields)
    log.log(level, json.dumps(payload, default=str, sort_keys=True))


@contextmanager
def timed(log: logging.Logger, event: str, **fields: Any) -> Iterator[dict]:
    """Time a block; extra fields may be added to the yielded dict before it closes."""
    t0 = time.time()
    extra: dict = {}
    try:
        yield extra
    except Exception as e:
        fields["error"] = type(e).__name__
        raise
    finally:
        fields.update(extra)
        log_event(log, event, dur_ms=int((time.time() - t0) * 1000), **fields)
