"""
CSV diagnostics traces.
"""
import csv
from pathlib import Path
from typing import Iterable, Optional, Sequence

from loguru import logger

from ..exceptions import IoError
from .base import PathLike


def format_value(value) -> str:
    """Render a cell: blank for None, shortest round-tripping repr for floats."""
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(path: PathLike, columns: Sequence[str], rows: Iterable[Sequence[Optional[object]]]) -> int:
    """Write a header line and one line per row; returns the number of rows written."""
    count = 0
    try:
        with Path(path).open("w", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(columns)
            for row in rows:
                writer.writerow([format_value(v) for v in row])
                count += 1
    except OSError as e:
        raise IoError(f"cannot write {path}: {e}") from e
    logger.debug(f"Wrote {count} diagnostics rows to {path}")
    return count
