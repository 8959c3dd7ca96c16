"""Cell counts of the labelled configuration space and the covering identity.

Giving the r robots and R ghosts individual names produces a cover of the
unlabelled space: the deck group permutes robot names and ghost names
separately, so every unlabelled d-cell lifts to exactly r! R! labelled
ones.  A labelled d-cell is a partition of the n + N vertices together with
the r + R occupants into d blocks of four (left vertex, right vertex,
robot, ghost: a robot sliding along an edge displaces a ghost along it) and
T - 2d blocks of two (vertex, occupant).

Counting those partitions directly gives the closed form below, which is
cross-checked here against literal partition enumeration for small T and,
in verify_cover_index, against r! R! times the unlabelled f-vector for both
the space itself and its transpose partner (occupants and sides swapped).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from . import confspace
from .errors import ParameterError
from .params import Parameters


def labelled_cell_count(p: Parameters, d: int) -> int:
    """Number of labelled d-cells: C(n,d) C(N,d) C(r,d) C(R,d) (d!)^3 (T-2d)!.

    Choose which vertices and occupants enter the d four-blocks, match them
    up (three independent bijections onto the chosen left vertices), then
    pair the remaining vertices with the remaining occupants arbitrarily.
    """
    if d < 0:
        raise ParameterError(f"dimension must be non-negative, got {d}")
    if 2 * d > p.T:
        return 0  # d four-blocks need 2d of the T vertices
    return (
        comb(p.n, d)
        * comb(p.N, d)
        * comb(p.r, d)
        * comb(p.R, d)
        * factorial(d) ** 3
        * factorial(p.T - 2 * d)
    )


@dataclass(frozen=True)
class LabelledCellCount:
    parameters: Parameters
    counts: tuple[int, ...]  # index d


def labelled_cell_counts(p: Parameters, dmax: int | None = None) -> LabelledCellCount:
    if dmax is None:
        dmax = min(p.r, p.R, p.n, p.N)
    return LabelledCellCount(p, tuple(labelled_cell_count(p, d) for d in range(dmax + 1)))


def brute_force_labelled_count(p: Parameters, d: int) -> int:
    """Literal partition enumeration, for validating the closed form.

    Recursively extends the block containing the smallest unused vertex
    (2-block with any unused occupant, or 4-block when it is a left
    vertex).  Exponential; intended for T <= 6.
    """
    if p.T > 8:
        raise ParameterError(f"brute force enumeration capped at T = 8, got {p.T}")
    lefts = tuple(("L", i) for i in range(p.n))
    rights = tuple(("R", i) for i in range(p.N))
    robots = tuple(("rob", i) for i in range(p.r))
    ghosts = tuple(("gho", i) for i in range(p.R))

    def rec(free_l, free_r, free_rob, free_gho, fours):
        if not free_l and not free_r:
            return 1 if fours == 0 else 0
        total = 0
        if free_l:
            v, rest_l = free_l[0], free_l[1:]
            for k, rob in enumerate(free_rob):
                total += rec(rest_l, free_r, free_rob[:k] + free_rob[k + 1 :], free_gho, fours)
            for k, gho in enumerate(free_gho):
                total += rec(rest_l, free_r, free_rob, free_gho[:k] + free_gho[k + 1 :], fours)
            if fours > 0:
                for kw, w in enumerate(free_r):
                    for kr, rob in enumerate(free_rob):
                        for kg, gho in enumerate(free_gho):
                            total += rec(
                                rest_l,
                                free_r[:kw] + free_r[kw + 1 :],
                                free_rob[:kr] + free_rob[kr + 1 :],
                                free_gho[:kg] + free_gho[kg + 1 :],
                                fours - 1,
                            )
        else:
            w, rest_r = free_r[0], free_r[1:]
            for k, rob in enumerate(free_rob):
                total += rec(free_l, rest_r, free_rob[:k] + free_rob[k + 1 :], free_gho, fours)
            for k, gho in enumerate(free_gho):
                total += rec(free_l, rest_r, free_rob, free_gho[:k] + free_gho[k + 1 :], fours)
        return total

    return rec(lefts, rights, robots, ghosts, d)


@dataclass(frozen=True)
class CoverDimCheck:
    d: int
    labelled: int
    robot_side: int  # r! R! f_d(Conf_r(n, N))
    transpose_side: int  # n! N! f_d(Conf_n(r, R))

    @property
    def ok(self) -> bool:
        return self.labelled == self.robot_side == self.transpose_side


@dataclass(frozen=True)
class CoverCheck:
    parameters: Parameters
    rows: tuple[CoverDimCheck, ...]

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)


def verify_cover_index(
    p: Parameters,
    dmax: int | None = None,
    max_zero_cells: int = confspace.DEFAULT_MAX_ZERO_CELLS,
) -> CoverCheck:
    """Check labelled counts against r! R! (and, via the orbit, n! N!) times
    the unlabelled f-vectors, dimension by dimension."""
    if dmax is None:
        dmax = min(p.r, p.R, p.n, p.N)
    C = confspace.build_conf(p.r, p.n, p.N, max_zero_cells=max_zero_cells)
    Ct = confspace.build_conf(p.n, p.r, p.R, max_zero_cells=max_zero_cells)
    f = C.f_vector()
    ft = Ct.f_vector()
    rows = []
    for d in range(dmax + 1):
        fd = f[d] if d < len(f) else 0
        ftd = ft[d] if d < len(ft) else 0
        rows.append(
            CoverDimCheck(
                d,
                labelled_cell_count(p, d),
                factorial(p.r) * factorial(p.R) * fd,
                factorial(p.n) * factorial(p.N) * ftd,
            )
        )
    return CoverCheck(p, tuple(rows))
