import datetime
import logging
import threading
from pathlib import Path

_LOGGER_LOCK = threading.Lock()
_LAST_TIMESTAMP: str | None = None
_LOGGER_SUFFIX_ID: int = 1


def setup_logging(level: int, log_dir_path: Path | None = None) -> Path | None:
    """Console handler on the package logger, plus one log file per run when asked."""
    root = logging.getLogger("ris_coverage")
    root.setLevel(min(level, logging.DEBUG) if log_dir_path is not None else level)
    for handler in list(root.handlers):
        root.removeHandler(handler)
        handler.close()

    console = logging.StreamHandler()
    console.setLevel(level)
    console.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root.addHandler(console)

    if log_dir_path is None:
        return None

    log_dir_path.mkdir(parents=True, exist_ok=True)
    file_path = log_dir_path / _next_log_file_name()
    handler = logging.FileHandler(file_path, encoding="utf-8")
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(logging.Formatter("%(asctime)s    %(name)s    %(message)s", "%H:%M:%S"))
    root.addHandler(handler)
    return file_path


def _next_log_file_name() -> str:
    global _LAST_TIMESTAMP, _LOGGER_SUFFIX_ID  # pylint: disable=global-statement

    now = datetime.datetime.now(datetime.UTC)
    # second-level precision, a suffix separates runs started within one second
    timestamp_key = now.strftime("%Y-%m-%d %H-%M-%S")

    with _LOGGER_LOCK:
        if _LAST_TIMESTAMP == timestamp_key:
            _LOGGER_SUFFIX_ID += 1
            suffix_id = _LOGGER_SUFFIX_ID
        else:
            _LAST_TIMESTAMP = timestamp_key
            _LOGGER_SUFFIX_ID = 1
            suffix_id = 1

    if suffix_id == 1:
        return f"run {timestamp_key}.log"
    return f"run {timestamp_key}_{suffix_id}.log"
