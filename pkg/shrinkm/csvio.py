from __future__ import annotations

import csv

import numpy as np
import numpy.typing as npt

from shrinkm.base import DataSample, MalformedDataError
from shrinkm.utils import PathLike


def read_matrix(path: PathLike, skip_header: bool = False) -> DataSample:
    """Reads one observation per row of a comma-separated file.

    Blank lines are ignored.

    Raises:
        MalformedDataError: On non-numeric cells, ragged rows or no data.
    """
    rows: list[list[float]] = []
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.reader(f)
        if skip_header:
            next(reader, None)
        for record in reader:
            if not any(cell.strip() for cell in record):
                continue
            line = reader.line_num
            try:
                values = [float(cell) for cell in record]
            except ValueError:
                bad = next(j for j, cell in enumerate(record, 1)
                           if not _is_number(cell))
                raise MalformedDataError(
                    f"{path}: non-numeric value {record[bad - 1]!r} at "
                    f"line {line}, column {bad}") from None
            if rows and len(values) != len(rows[0]):
                raise MalformedDataError(
                    f"{path}: ragged row at line {line}, expected "
                    f"{len(rows[0])} columns, got {len(values)}")
            rows.append(values)
    if not rows:
        raise MalformedDataError(f"{path}: no data rows")
    x = np.array(rows, dtype=np.float64)
    if not np.all(np.isfinite(x)):
        raise MalformedDataError(f"{path}: non-finite values")
    return DataSample.of(x)


def _is_number(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def write_matrix(path: PathLike, matrix: npt.ArrayLike) -> None:
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerows([repr(float(v)) for v in row]
                         for row in np.atleast_2d(matrix))

__all__ = [
    "read_matrix",
    "write_matrix",
]
