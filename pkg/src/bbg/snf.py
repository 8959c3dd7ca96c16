"""Smith normal form with a compiled kernel and a pure-Python fallback.

The backend is selected at import: the Cython kernel (bbg._snf_core) when it
is built and importable, arbitrary-precision Python otherwise.  The kernel
works in checked 64-bit arithmetic; if any intermediate overflows it raises
and the computation transparently restarts in the pure backend, so results
are always exact.  Set BBG_NO_COMPILED=1 to force the pure backend.
"""

from __future__ import annotations

import os
from array import array
from typing import NamedTuple

from ._snf_pure import smith_normal_form_pure

try:
    if os.environ.get("BBG_NO_COMPILED"):
        _snf_core = None
    else:
        from . import _snf_core
except ImportError:  # extension not built
    _snf_core = None

HAVE_COMPILED = _snf_core is not None

# Inputs with any entry at or beyond 2^62 go straight to the pure backend.
_FIT_BOUND = 1 << 62


class SnfResult(NamedTuple):
    factors: tuple[int, ...]
    rank: int


def backend_name() -> str:
    return "compiled" if HAVE_COMPILED else "pure"


def _checked_rows(matrix) -> list[list[int]]:
    rows = [[int(v) for v in row] for row in matrix]
    if rows:
        nc = len(rows[0])
        if any(len(r) != nc for r in rows):
            raise ValueError("matrix rows have unequal lengths")
    return rows


def _run_compiled(rows: list[list[int]]) -> list[int]:
    nr = len(rows)
    nc = len(rows[0])
    flat = array("q", (v for row in rows for v in row))
    return _snf_core.smith_kernel(flat, nr, nc)


def smith_normal_form(matrix, backend: str | None = None) -> SnfResult:
    """Invariant factors d_1 | d_2 | ... | d_k of an integer matrix.

    `matrix` is any iterable of equal-length rows of ints.  Returns the
    positive factors in divisibility order; k is the rank.  `backend` forces
    "compiled" or "pure" (None picks automatically).
    """
    if backend not in (None, "compiled", "pure"):
        raise ValueError(f"unknown backend {backend!r}")
    rows = _checked_rows(matrix)
    if not rows or not rows[0]:
        return SnfResult((), 0)

    if backend == "compiled":
        if not HAVE_COMPILED:
            raise RuntimeError("compiled SNF kernel is not available")
        factors = _run_compiled(rows)
    elif backend == "pure":
        factors = smith_normal_form_pure(rows)
    else:
        fits = HAVE_COMPILED and all(
            -_FIT_BOUND < v < _FIT_BOUND for row in rows for v in row
        )
        if fits:
            try:
                factors = _run_compiled(rows)
            except _snf_core.KernelOverflow:
                factors = smith_normal_form_pure(rows)
        else:
            factors = smith_normal_form_pure(rows)

    return SnfResult(tuple(factors), len(factors))
