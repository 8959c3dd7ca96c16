"""Verification harness: twelve numbered consistency checks.

Each criterion is an independent function that either returns a short
success detail or raises CheckFailed naming the exact counterexample.
run() executes a chosen subset at a given level, times each criterion, and
returns the results in criterion order.  "quick" keeps every parameter grid
at T <= 9 and boards small; "full" extends to the documented caps.

Mutation mode (mutate="nu") deliberately corrupts the rook-complex
connectivity formula for the duration of one run.  It is a self-test: a
harness that still passes against a wrong formula would be vacuous.
"""

from __future__ import annotations

import random
import time
from contextlib import contextmanager
from dataclasses import dataclass
from math import factorial

from . import confspace, covers, params, report, simplicial
from .errors import BbgError, ParameterError
from .homology import CONTRACTIBLE, homological_connectivity, homology_of

LEVELS = ("quick", "full")
DEFAULT_SEED = 0


class CheckFailed(BbgError):
    """A criterion found a counterexample; the message names it."""


@dataclass(frozen=True)
class Caps:
    grid_T: int  # parameter grids (criteria 7 and 10)
    witness_T: int  # homology witness sweep in criterion 7
    cover_T: int  # covering identity grid in criterion 9
    chessboard_sum: int  # m + n cap in criterion 3
    puncture_sum: int  # m + n cap in criterion 5
    join_boards: tuple[tuple[int, int], ...]  # factors for the join identity
    brute_T: int  # brute-force validation cap in criterion 9
    link_grid: tuple[int, int, int]  # (r, n, N) maxima in criteria 4 and 11
    link_extra: tuple[tuple[int, int, int], ...]
    duality_T: int  # criterion 12
    floor_pairs: int  # random pairs in criterion 10


CAPS = {
    "quick": Caps(
        grid_T=9,
        witness_T=9,
        cover_T=9,
        chessboard_sum=8,
        puncture_sum=7,
        join_boards=((1, 1), (1, 2), (2, 2)),
        brute_T=5,
        link_grid=(2, 3, 4),
        link_extra=((3, 3, 3),),
        duality_T=20,
        floor_pairs=2_000,
    ),
    "full": Caps(
        grid_T=14,
        witness_T=10,
        cover_T=9,
        chessboard_sum=10,
        puncture_sum=9,
        join_boards=((1, 1), (1, 2), (2, 2), (2, 3)),
        brute_T=6,
        link_grid=(3, 4, 5),
        link_extra=((4, 4, 4),),
        duality_T=40,
        floor_pairs=10_000,
    ),
}


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    seconds: float
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"criterion {self.number:>2} {status} ({self.seconds:.2f} s) {self.name}: {self.detail}"


@dataclass(frozen=True)
class VerificationRun:
    level: str
    seed: int
    mutate: str | None
    results: tuple[CriterionResult, ...]

    @property
    def ok(self) -> bool:
        return all(res.passed for res in self.results)

    def lines(self) -> list[str]:
        out = [res.line() for res in self.results]
        n_pass = sum(res.passed for res in self.results)
        tag = f" (mutated: {self.mutate})" if self.mutate else ""
        out.append(
            f"verify {self.level}{tag}: {n_pass}/{len(self.results)} criteria passed"
        )
        return out


class _Ctx:
    """Per-run caches: complexes, links, and model-link homology."""

    def __init__(self, caps: Caps, seed: int):
        self.caps = caps
        self.seed = seed
        self._conf: dict = {}
        self._links: dict = {}
        self._link_h: dict = {}

    def conf(self, r: int, n: int, N: int) -> confspace.CubeComplex:
        key = (r, n, N)
        if key not in self._conf:
            self._conf[key] = confspace.build_conf(r, n, N)
        return self._conf[key]

    def links(self, r: int, n: int, N: int):
        key = (r, n, N)
        if key not in self._links:
            C = self.conf(r, n, N)
            self._links[key] = tuple(
                (v, confspace.vertex_link(C, v)) for v in C.zero_cells()
            )
        return self._links[key]

    def model_link_homology(self, t: params.SolutionType):
        key = t.as_tuple()
        if key not in self._link_h:
            L = simplicial.join(
                simplicial.chessboard(t.a, t.d), simplicial.chessboard(t.b, t.c)
            )
            self._link_h[key] = homology_of(L)
        return self._link_h[key]


def _nontrivial_quadruples(T: int) -> list[params.Parameters]:
    out = []
    for r in range(2, T - 1):
        for n in range(2, T - 1):
            p = params.Parameters(r, T - r, n, T - n)
            if p.nontrivial:
                out.append(p)
    return out


def _canonical_quadruples(T: int) -> list[params.Parameters]:
    # r <= n <= N <= R is equivalent to 2 <= r <= n <= T // 2 here.
    return [
        params.Parameters(r, T - r, n, T - n)
        for n in range(2, T // 2 + 1)
        for r in range(2, n + 1)
    ]


def _connected(K: simplicial.SimplicialComplex) -> bool:
    if K.n_vertices <= 1:
        return True
    adj = {v: set() for v in K.vertices}
    for e in K.skeleton_edges():
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)
    start = next(iter(K.vertices))
    seen = {start}
    stack = [start]
    while stack:
        for u in adj[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == K.n_vertices


def _is_single_cycle(K: simplicial.SimplicialComplex, length: int) -> bool:
    if K.f_vector() != (length, length):
        return False
    deg = {v: 0 for v in K.vertices}
    for e in K.skeleton_edges():
        for v in e:
            deg[v] += 1
    return all(d == 2 for d in deg.values()) and _connected(K)


# ---------------------------------------------------------------------------
# criteria


def _c1_vertex_counts(ctx: _Ctx) -> str:
    t0 = time.perf_counter()
    f0 = len(confspace.build_conf(3, 4, 5).zero_cells())
    f0t = len(confspace.build_conf(4, 3, 6).zero_cells())
    lab = covers.labelled_cell_count(params.Parameters(3, 6, 4, 5), 0)
    checks = [
        ("f_0(Conf_3(4,5))", f0, 84),
        ("f_0(Conf_4(3,6))", f0t, 126),
        ("labelled 0-cells", lab, 362880),
        ("84 * 3! * 6!", 84 * factorial(3) * factorial(6), 362880),
        ("126 * 4! * 5!", 126 * factorial(4) * factorial(5), 362880),
    ]
    for name, got, want in checks:
        if got != want:
            raise CheckFailed(f"{name} = {got}, expected {want}")
    dt = time.perf_counter() - t0
    if dt >= 1.0:
        raise CheckFailed(f"took {dt:.2f} s, budget is 1 s")
    return f"84 and 126 vertices, 362880 labelled, in {dt:.3f} s"


def _c2_type_table(ctx: _Ctx) -> str:
    p = params.Parameters.for_robots(3, 4, 5)
    rows = list(reversed(params.solution_types(p)))  # decreasing a: table order
    cb, jn = simplicial.chessboard, simplicial.join
    expected = [
        ((3, 0, 1, 5), cb(3, 5), 1),
        ((2, 1, 2, 4), jn(cb(2, 4), cb(1, 2)), 1),
        ((1, 2, 3, 3), jn(cb(1, 3), cb(2, 3)), 1),
        ((0, 3, 4, 2), cb(3, 4), 0),
    ]
    if len(rows) != len(expected):
        raise CheckFailed(f"expected 4 solution types, got {len(rows)}")
    for t, (tup, link, bound) in zip(rows, expected):
        if t.as_tuple() != tup:
            raise CheckFailed(f"type row {t.as_tuple()}, expected {tup}")
        if simplicial.model_link(t, p.n, p.N) != link:
            raise CheckFailed(f"model link of {tup} differs from the expected join")
        got = params.link_lower_bound(t)
        if got != bound:
            raise CheckFailed(f"lower bound of {tup} = {got}, expected {bound}")
    l = params.ell(p)
    if l != 2:
        raise CheckFailed(f"ell = {l}, expected 2")
    return "four rows with links Delta(3,5), Delta(2,4)*Delta(1,2), Delta(1,3)*Delta(2,3), Delta(3,4), bounds (1,1,1,0), ell = 2"


def _c3_chessboard(ctx: _Ctx) -> str:
    cap = ctx.caps.chessboard_sum
    bad, count = [], 0
    for m in range(1, cap):
        for n in range(m, cap - m + 1):
            count += 1
            H = homology_of(simplicial.chessboard(m, n))
            v = params.nu(m, n)
            hc = homological_connectivity(H)
            critical = H.betti.get(v - 1, 0) or H.torsion.get(v - 1, ())
            if hc is CONTRACTIBLE or hc != v - 2 or not critical:
                bad.append(
                    f"board ({m},{n}): hconn {hc} vs nu-2 = {v - 2}, "
                    f"H~[{v - 1}] rank {H.betti.get(v - 1, 0)}, "
                    f"torsion {H.torsion.get(v - 1, ())}"
                )
    if bad:
        raise CheckFailed(f"{len(bad)} of {count} boards off: " + "; ".join(bad))
    return f"{count} boards with m+n <= {cap}: hconn = nu-2 and H~[nu-1] nonzero"


def _link_grid(ctx: _Ctx) -> list[tuple[int, int, int]]:
    rmax, nmax, Nmax = ctx.caps.link_grid
    grid = [
        (r, n, N)
        for r in range(1, rmax + 1)
        for n in range(1, nmax + 1)
        for N in range(1, Nmax + 1)
        if r <= n + N
    ]
    grid.extend(ctx.caps.link_extra)
    return grid


def _c4_link_structure(ctx: _Ctx) -> str:
    checked = 0
    grid = _link_grid(ctx)
    for r, n, N in grid:
        C = ctx.conf(r, n, N)
        for v, L in ctx.links(r, n, N):
            t = confspace.classify_zero_cell(C, v)
            M = simplicial.model_link(t, n, N)
            if not simplicial.are_isomorphic(L, M):
                raise CheckFailed(
                    f"link of [{v}] in Conf_{r}({n},{N}) is not isomorphic "
                    f"to the model link of type {t.as_tuple()}"
                )
            checked += 1
    return f"{checked} vertex links over {len(grid)} parameter sets match their models"


def _strip_tag(tag: int):
    def fn(v):
        got, w = v
        if got != tag:
            raise CheckFailed("mixed tags where one join factor was deleted")
        return w

    return fn


def _deletion_join_identity(K, L, s) -> bool:
    J = simplicial.join(K, L)
    lhs = simplicial.delete_closed_simplex(J, s)
    s0 = frozenset(v for tag, v in s if tag == 0)
    s1 = frozenset(v for tag, v in s if tag == 1)
    K2 = simplicial.delete_closed_simplex(K, s0)
    L2 = simplicial.delete_closed_simplex(L, s1)
    if K2.is_empty and L2.is_empty:
        return lhs.is_empty
    if K2.is_empty:
        return lhs.relabel(_strip_tag(1)) == L2
    if L2.is_empty:
        return lhs.relabel(_strip_tag(0)) == K2
    return lhs == simplicial.join(K2, L2)


def _c5_punctured(ctx: _Ctx) -> str:
    cap = ctx.caps.puncture_sum
    bad, punctures = [], 0
    for m in range(1, cap):
        for n in range(m, cap - m + 1):
            K = simplicial.chessboard(m, n)
            floor = params.nu(m, n) - 2
            for ss in K.faces().values():
                for s in ss:
                    D = simplicial.delete_closed_simplex(K, s)
                    hc = homological_connectivity(homology_of(D))
                    punctures += 1
                    if not hc >= floor:
                        lbl = ",".join(
                            simplicial.format_label(v)
                            for v in sorted(s, key=simplicial._label_key)
                        )
                        bad.append(
                            f"board ({m},{n}) minus [{lbl}]: hconn {hc} < {floor}"
                        )
    if bad:
        raise CheckFailed(f"{len(bad)} puncture(s) below nu-2: " + "; ".join(bad))

    joins = 0
    boards = [simplicial.chessboard(m, n) for m, n in ctx.caps.join_boards]
    for K in boards:
        for L in boards:
            J = simplicial.join(K, L)
            for ss in J.faces().values():
                for s in ss:
                    joins += 1
                    if not _deletion_join_identity(K, L, s):
                        raise CheckFailed(
                            f"deletion-join identity fails for factors "
                            f"{K!r}, {L!r} at a {len(s) - 1}-simplex"
                        )
    return (
        f"{punctures} punctures (m+n <= {cap}) stay above nu-2; "
        f"deletion-join identity holds at {joins} simplices"
    )


def _c6_surface(ctx: _Ctx) -> str:
    C = ctx.conf(2, 3, 3)
    f = C.f_vector()
    if f != (15, 36, 18) or C.euler_characteristic() != -3:
        raise CheckFailed(f"f-vector {f}, euler {C.euler_characteristic()}")
    for v, L in ctx.links(2, 3, 3):
        t = confspace.classify_zero_cell(C, v)
        length = 4 if t.a == 1 else 6
        if not _is_single_cycle(L, length):
            raise CheckFailed(
                f"link of [{v}] (type {t.as_tuple()}) is not a {length}-cycle"
            )
    return "f = (15, 36, 18), euler -3, links are 6-cycles (same side) and 4-cycles (opposite)"


def _c7_main_bound(ctx: _Ctx) -> str:
    sets = 0
    for T in range(4, ctx.caps.grid_T + 1):
        for p in _canonical_quadruples(T):
            l = params.ell(p)
            best = min(params.link_lower_bound(t) for t in params.solution_types(p))
            sets += 1
            if best != l - 2:
                raise CheckFailed(
                    f"{p}: min link bound {best} differs from ell-2 = {l - 2}"
                )
    witnesses = 0
    for T in range(4, ctx.caps.witness_T + 1):
        for p in _canonical_quadruples(T):
            l = params.ell(p)
            # Low bounds are the likely witnesses; among those, try small links first.
            types = sorted(
                params.solution_types(p),
                key=lambda t: (params.link_lower_bound(t), report.model_link_face_count(t)),
            )
            for t in types:
                H = ctx.model_link_homology(t)
                if H.betti.get(l - 1, 0) or H.torsion.get(l - 1, ()):
                    witnesses += 1
                    break
            else:
                raise CheckFailed(
                    f"{p}: no type has nonzero H~[{l - 1}] in its model link"
                )
    return (
        f"{sets} canonical sets (T <= {ctx.caps.grid_T}) have min bound = ell-2; "
        f"homology witnesses found for all {witnesses} sets with T <= {ctx.caps.witness_T}"
    )


def _c8_exceptional(ctx: _Ctx) -> str:
    p = params.Parameters(4, 4, 4, 4)
    if not params.is_exceptional(p):
        raise CheckFailed("(4,4,4,4) not flagged exceptional")
    if params.ell(p) != 2:
        raise CheckFailed(f"ell(4,4,4,4) = {params.ell(p)}, expected 2")
    t = params.SolutionType(2, 2, 2, 2)
    L = simplicial.model_link(t, 4, 4)
    expected = simplicial.join(simplicial.chessboard(2, 2), simplicial.chessboard(2, 2))
    if L != expected:
        raise CheckFailed("witness link is not Delta(2,2) * Delta(2,2)")
    H = homology_of(L)
    if H.betti.get(0, 0) != 0 or H.torsion.get(0, ()):
        raise CheckFailed("witness link is not connected")
    if H.betti.get(1, 0) != 1 or H.torsion.get(1, ()):
        raise CheckFailed(
            f"H~1 of the witness link: rank {H.betti.get(1, 0)}, "
            f"torsion {H.torsion.get(1, ())}; expected free rank 1"
        )
    return "is_exceptional, ell = 2, witness Delta(2,2)*Delta(2,2) connected with H~1 = Z"


def _c9_covering(ctx: _Ctx) -> str:
    rows = 0
    for T in range(4, ctx.caps.cover_T + 1):
        for p in _nontrivial_quadruples(T):
            check = covers.verify_cover_index(p)
            for row in check.rows:
                rows += 1
                if not row.ok:
                    raise CheckFailed(
                        f"{p} d={row.d}: labelled {row.labelled}, "
                        f"r!R!f_d {row.robot_side}, n!N!f'_d {row.transpose_side}"
                    )
    brutes = 0
    for T in range(4, ctx.caps.brute_T + 1):
        for p in _nontrivial_quadruples(T):
            for d in range(min(p.as_tuple()) + 2):
                closed = covers.labelled_cell_count(p, d)
                brute = covers.brute_force_labelled_count(p, d)
                brutes += 1
                if closed != brute:
                    raise CheckFailed(
                        f"{p} d={d}: closed form {closed}, brute force {brute}"
                    )
    return (
        f"{rows} dimensions over T <= {ctx.caps.cover_T} match r!R!f_d on both "
        f"sides; closed form equals brute force in {brutes} cases (T <= {ctx.caps.brute_T})"
    )


def _c10_floor_lemma(ctx: _Ctx) -> str:
    rng = random.Random(ctx.seed)
    for _ in range(ctx.caps.floor_pairs):
        a = rng.randint(-100, 1000)
        b = rng.randint(-100, 1000)
        params.add_floors(a, b)  # raises ConsistencyError on mismatch
    cases = 0
    for T in range(4, ctx.caps.grid_T + 1):
        for p in _nontrivial_quadruples(T):
            for t in params.solution_types(p):
                s = params.add_floors(t.a + t.d + 1, t.b + t.c + 1)
                mod = (t.b + t.c) % 3
                if mod == 2:
                    want = (p.n + p.N + 2) // 3
                elif mod == 0:
                    want = (p.n + p.N + 1) // 3
                else:
                    want = (p.n + p.N) // 3
                cases += 1
                if s != want:
                    raise CheckFailed(
                        f"{p} type {t.as_tuple()}: floor sum {s}, "
                        f"three-case law gives {want} (b+c = {mod} mod 3)"
                    )
    return (
        f"{ctx.caps.floor_pairs} random pairs (seed {ctx.seed}) and "
        f"{cases} solution types obey the floor addition laws"
    )


def _c11_flag(ctx: _Ctx) -> str:
    checked = 0
    grid = _link_grid(ctx)
    for r, n, N in grid:
        for v, L in ctx.links(r, n, N):
            if not confspace.is_flag(L):
                raise CheckFailed(f"link of [{v}] in Conf_{r}({n},{N}) is not flag")
            checked += 1
    return f"{checked} vertex links over {len(grid)} parameter sets are flag"


def _c12_duality(ctx: _Ctx) -> str:
    t0 = time.perf_counter()
    cases = 0
    for n in range(2, ctx.caps.duality_T - 1):
        for N in range(n, ctx.caps.duality_T - n + 1):
            for r in range(2, n + 1):
                p = params.Parameters.for_robots(r, n, N)
                dual = params.is_duality(p)  # cross-checks ell(p) = r itself
                cases += 1
                if dual != (n >= 2 * r - 1):
                    raise CheckFailed(
                        f"{p}: is_duality {dual} but n >= 2r-1 is {n >= 2 * r - 1}"
                    )
                if dual != (params.ell(p) == p.r):
                    raise CheckFailed(f"{p}: duality and ell = r disagree")
    dt = time.perf_counter() - t0
    if dt >= 1.0:
        raise CheckFailed(f"took {dt:.2f} s, budget is 1 s")
    return f"{cases} parameter sets (T <= {ctx.caps.duality_T}) agree on all three forms, {dt:.3f} s"


CRITERIA: dict[int, tuple[str, object]] = {
    1: ("vertex counts", _c1_vertex_counts),
    2: ("type table of Conf_3(4,5)", _c2_type_table),
    3: ("chessboard connectivity", _c3_chessboard),
    4: ("link structure", _c4_link_structure),
    5: ("punctured connectivity", _c5_punctured),
    6: ("surface links of Conf_2(3,3)", _c6_surface),
    7: ("connectivity bound consistency", _c7_main_bound),
    8: ("exceptional case (4,4,4,4)", _c8_exceptional),
    9: ("covering identity", _c9_covering),
    10: ("floor lemma", _c10_floor_lemma),
    11: ("flag condition", _c11_flag),
    12: ("duality criterion", _c12_duality),
}


@contextmanager
def _mutated(name: str | None):
    if name is None:
        yield
        return
    if name != "nu":
        raise ParameterError(f"unknown mutation {name!r}; only 'nu' is supported")
    original = params.nu

    def wrong_nu(m: int, n: int) -> int:
        # Off by one in the floor term whenever m + n = 1 mod 3.
        return min(m, n, (m + n + 2) // 3)

    params.nu = wrong_nu
    try:
        yield
    finally:
        params.nu = original


def run(
    level: str = "quick",
    seed: int = DEFAULT_SEED,
    mutate: str | None = None,
    criteria: list[int] | None = None,
) -> VerificationRun:
    """Run the selected criteria (all twelve by default) at the given level."""
    if level not in CAPS:
        raise ParameterError(f"unknown level {level!r}; choose from {LEVELS}")
    selected = sorted(CRITERIA) if criteria is None else sorted(set(criteria))
    unknown = [k for k in selected if k not in CRITERIA]
    if unknown:
        raise ParameterError(f"unknown criteria {unknown}; valid numbers are 1..12")

    ctx = _Ctx(CAPS[level], seed)
    results = []
    with _mutated(mutate):
        for k in selected:
            name, fn = CRITERIA[k]
            t0 = time.perf_counter()
            try:
                detail = fn(ctx)
                passed = True
            except CheckFailed as e:
                detail, passed = str(e), False
            except Exception as e:  # noqa: BLE001 - a crash is a failure with a name
                detail, passed = f"{type(e).__name__}: {e}", False
            results.append(
                CriterionResult(k, name, passed, time.perf_counter() - t0, detail)
            )
    return VerificationRun(level, seed, mutate, tuple(results))
