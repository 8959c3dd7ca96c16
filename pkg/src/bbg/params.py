"""Integer parameter algebra for robot configurations on complete bipartite graphs.

Placing r robots on the vertices of K_{n,N} leaves R = n + N - r vertices
free; we call the free vertices ghosts and write T = r + R = n + N.  A
parameter quadruple is non-trivial when min(r, R, n, N) >= 2; below that the
configuration space deformation retracts to a graph and its braid group is
free, so the connectivity formulas here do not apply.

Everything in this module is exact integer arithmetic: the quadruples, the
2x2 row/column-sum solutions (a, b, c, d) that classify configurations by
side, the connectivity index nu of rook-placement complexes, and the
connectivity-at-infinity bound ell.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ConsistencyError,
    ParameterError,
    ParameterOrderError,
    TrivialParametersError,
)


def nu(m: int, n: int) -> int:
    """Connectivity index of the m x n rook-placement complex.

    nu(m, n) = min(m, n, floor((m + n + 1) / 3)).  The complex of
    non-attacking rook placements on an m x n board is (nu - 2)-connected.
    """
    if m < 0 or n < 0:
        raise ParameterError(f"nu needs non-negative arguments, got ({m}, {n})")
    return min(m, n, (m + n + 1) // 3)


@dataclass(frozen=True)
class Parameters:
    """A quadruple (r, R, n, N) with r + R = n + N."""

    r: int
    R: int
    n: int
    N: int

    def __post_init__(self):
        for name in ("r", "R", "n", "N"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ParameterError(f"{name} must be a non-negative integer, got {v!r}")
        if self.r + self.R != self.n + self.N:
            raise ParameterError(
                f"r + R must equal n + N, got {self.r}+{self.R} != {self.n}+{self.N}"
            )

    @classmethod
    def for_robots(cls, r: int, n: int, N: int) -> "Parameters":
        """Parameters for r robots on K_{n,N}; the ghost count R is derived."""
        if not all(isinstance(v, int) for v in (r, n, N)):
            raise ParameterError("r, n, N must be integers")
        if r < 0 or n < 0 or N < 0 or r > n + N:
            raise ParameterError(f"need 0 <= r <= n + N, got r={r}, n={n}, N={N}")
        return cls(r, n + N - r, n, N)

    @property
    def T(self) -> int:
        return self.r + self.R

    @property
    def nontrivial(self) -> bool:
        return min(self.r, self.R, self.n, self.N) >= 2

    @property
    def is_canonical(self) -> bool:
        return self.r <= self.n <= self.N <= self.R

    def require_nontrivial(self):
        if not self.nontrivial:
            raise TrivialParametersError(
                f"parameters {self.as_tuple()} are trivial "
                "(min(r, R, n, N) < 2: the braid group is free and the "
                "connectivity formulas do not apply)"
            )

    def require_canonical(self):
        if not self.is_canonical:
            raise ParameterOrderError(
                f"parameters {self.as_tuple()} are not canonically ordered "
                "(need r <= n <= N <= R); canonicalize via symmetry_orbit"
            )

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.r, self.R, self.n, self.N)

    def __str__(self):
        return f"Conf_{self.r}({self.n},{self.N})"


@dataclass(frozen=True)
class SolutionType:
    """A side-count solution (a, b, c, d).

    a robots and c ghosts sit on the n-side, b robots and d ghosts on the
    N-side, so a + b = r, c + d = R, a + c = n, b + d = N.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if min(self.a, self.b, self.c, self.d) < 0:
            raise ParameterError(f"negative entry in solution type {self.as_tuple()}")

    def validate_for(self, p: Parameters):
        ok = (
            self.a + self.b == p.r
            and self.c + self.d == p.R
            and self.a + self.c == p.n
            and self.b + self.d == p.N
        )
        if not ok:
            raise ParameterError(f"solution type {self.as_tuple()} invalid for {p}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


def solution_types(p: Parameters) -> list[SolutionType]:
    """All non-negative solutions for p, ordered by increasing a.

    Choosing a (robots on the n-side) determines the rest: b = r - a,
    c = n - a, d = N - b.  Never empty for a valid quadruple.
    """
    types = []
    for a in range(max(0, p.r - p.N), min(p.r, p.n) + 1):
        t = SolutionType(a, p.r - a, p.n - a, p.N - p.r + a)
        t.validate_for(p)
        types.append(t)
    return types


def link_lower_bound(t: SolutionType) -> int:
    """Connectivity lower bound of the link of a type-t configuration.

    The link is the join of an a x d and a b x c rook complex, and a join
    is (p + q + 2)-connected when its factors are p- and q-connected, so
    the bound is nu(a, d) + nu(b, c) - 2.
    """
    return nu(t.a, t.d) + nu(t.b, t.c) - 2


def ell_terms(p: Parameters) -> tuple[int, int, int]:
    """The three minimands of ell, in order."""
    p.require_nontrivial()
    l0 = min(p.r, p.R, p.n, p.N)
    l1 = (min(p.r, p.R) + min(p.n, p.N) + 1) // 3
    l2 = (p.r + p.R) // 3
    return (l0, l1, l2)


def ell(p: Parameters) -> int:
    """Connectivity-at-infinity index: the space is (ell-2)- but not
    (ell-1)-connected at infinity.  Requires non-trivial parameters."""
    return min(ell_terms(p))


@dataclass(frozen=True)
class ClaimsMinima:
    """Minima of the nine link-bound summand groups over all solution types.

    Grouped by how many floor terms appear: none (both factors bounded by a
    side), one, or two.  Each value carries a witness type attaining it.
    """

    no_floor_min: int
    no_floor_witness: SolutionType
    one_floor_min: int
    one_floor_witness: SolutionType
    two_floor_min: int
    two_floor_witness: SolutionType

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.no_floor_min, self.one_floor_min, self.two_floor_min)


def _group_minima(t: SolutionType) -> tuple[int, int, int]:
    # The nine candidate sums for nu(a,d) + nu(b,c), grouped by floor count.
    fa = (t.a + t.d + 1) // 3
    fb = (t.b + t.c + 1) // 3
    no = min(t.a + t.b, t.a + t.c, t.d + t.b, t.d + t.c)
    one = min(t.a + fb, t.d + fb, fa + t.b, fa + t.c)
    return (no, one, fa + fb)


def claims_minima(p: Parameters) -> ClaimsMinima:
    """Closed-form group minima r, floor((r+n+1)/3), floor((n+N)/3),
    cross-checked against brute-force minimization over all types.

    Requires non-trivial, canonically ordered parameters.
    """
    p.require_nontrivial()
    p.require_canonical()

    closed = (p.r, (p.r + p.n + 1) // 3, (p.n + p.N) // 3)

    best = [None, None, None]
    witness = [None, None, None]
    for t in solution_types(p):
        for k, v in enumerate(_group_minima(t)):
            if best[k] is None or v < best[k]:
                best[k] = v
                witness[k] = t
    if tuple(best) != closed:
        raise ConsistencyError(
            f"claims minima mismatch for {p}: closed form {closed}, brute force {tuple(best)}"
        )
    return ClaimsMinima(best[0], witness[0], best[1], witness[1], best[2], witness[2])


def add_floors(p: int, q: int) -> int:
    """floor(p/3) + floor(q/3), checked against floor((p + q - i)/3), i = q mod 3."""
    out = p // 3 + q // 3
    i = q % 3
    if out != (p + q - i) // 3:
        raise ConsistencyError(f"floor addition identity failed for ({p}, {q})")
    return out


def symmetry_orbit(p: Parameters) -> tuple[tuple[Parameters, ...], Parameters]:
    """The up-to-8 parameter quadruples sharing a universal cover, plus the
    canonical member (the one with r <= n <= N <= R).

    The symmetries: swap the two sides, swap robots with ghosts, and
    transpose vertex counts with occupant counts.
    """
    r, R, n, N = p.as_tuple()
    raw = {
        (r, R, n, N), (r, R, N, n), (R, r, n, N), (R, r, N, n),
        (n, N, r, R), (n, N, R, r), (N, n, r, R), (N, n, R, r),
    }
    orbit = tuple(Parameters(*q) for q in sorted(raw))
    xs = sorted((r, R, n, N))
    canonical = Parameters(xs[0], xs[3], xs[1], xs[2])
    if canonical.as_tuple() not in raw:
        raise ConsistencyError(f"canonical member missing from orbit of {p}")
    return orbit, canonical


def is_exceptional(p: Parameters) -> bool:
    """True when all four parameters are equal to some r with r = 1 mod 3.

    In that case the generic bound is beaten by one: the witness link is a
    join of an (r-2)x(r-2) rook complex with a 2x2 one, a suspension.
    """
    p.require_nontrivial()
    p.require_canonical()
    r, R, n, N = p.as_tuple()
    return r == R == n == N and r % 3 == 1


def is_duality(p: Parameters) -> bool:
    """Whether the configuration space is an r-dimensional duality complex.

    Requires 2 <= r <= n <= N.  Holds exactly when n >= 2r - 1, which is
    cross-checked against the equivalent formulation ell(p) = r.
    """
    if not (2 <= p.r <= p.n <= p.N):
        raise ParameterOrderError(
            f"duality test needs 2 <= r <= n <= N, got {p.as_tuple()}"
        )
    result = p.n >= 2 * p.r - 1
    if result != (ell(p) == p.r):
        raise ConsistencyError(f"duality criteria disagree for {p}")
    return result
