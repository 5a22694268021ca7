"""
CSV helpers with full double-precision number formatting.
"""
from contextlib import contextmanager
from pathlib import Path
from typing import IO, Iterable, Iterator, List, Sequence, Union
import csv
import logging
import sys

logger = logging.getLogger(__name__)

Target = Union[str, Path, IO[str], None]


def format_float(value: float) -> str:
    """17 significant digits, enough to round-trip any double."""
    return "%.17g" % value


@contextmanager
def open_target(target: Target) -> Iterator[IO[str]]:
    """Yield a text stream for a path, an open stream, or stdout (None)."""
    if target is None:
        yield sys.stdout
    elif isinstance(target, (str, Path)):
        path = Path(target)
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="") as f:
            yield f
        logger.info(f"Wrote {path}")
    else:
        yield target


def write_csv(target: Target, header: Sequence[str],
              rows: Iterable[Sequence[float]]) -> None:
    """Write a header line and numeric rows."""
    with open_target(target) as stream:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_float(v) for v in row])


def read_csv(path: Union[str, Path]) -> tuple:
    """
    Read a numeric CSV written by write_csv.

    Returns:
        (header, rows) with rows as lists of floats
    """
    with open(path, newline="") as f:
        reader = csv.reader(f)
        header: List[str] = next(reader)
        rows = [[float(v) for v in row] for row in reader if row]
    return header, rows
