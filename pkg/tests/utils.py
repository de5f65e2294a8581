from __future__ import annotations

import io
from contextlib import contextmanager, redirect_stderr, redirect_stdout
from typing import Sequence

import numpy as np
import numpy.typing as npt

from shrinkm.cli import main


@contextmanager
def assert_raises(exception: type[BaseException], match: str = "",
                  verbose: bool = False):
    try:
        yield
    except exception as e:
        if verbose:
            print(f"raised: {e!r}")
        if match not in str(e):
            raise AssertionError(
                f"Expected {match!r} in the message of {e!r}") from e
    else:
        raise AssertionError(f"Expected {exception.__name__} to be raised.")


def assert_close(actual: npt.ArrayLike,
                 expected: npt.ArrayLike,
                 atol: float = 0.0,
                 rtol: float = 1e-12,
                 what: str = "value") -> None:
    a = np.asarray(actual, dtype=np.float64)
    b = np.asarray(expected, dtype=np.float64)
    if not np.allclose(a, b, rtol=rtol, atol=atol):
        raise AssertionError(f"{what}: {a} != {b} (atol={atol}, rtol={rtol})")


def run_cli(args: Sequence[str]) -> tuple[int, str, str]:
    """Runs the command line entry point, returning (status, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        status = main(list(args))
    return status, out.getvalue(), err.getvalue()


def parse_fields(stdout: str) -> dict[str, str]:
    return dict(line.split(": ", 1) for line in stdout.splitlines()
                if ": " in line)


__all__ = [
    "assert_close",
    "assert_raises",
    "parse_fields",
    "run_cli",
]
