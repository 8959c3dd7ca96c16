"""Finite abstract simplicial complexes with opaque hashable vertex labels.

A complex is stored by its facets (inclusion-maximal simplices).  Every
complex contains the empty simplex; the complex whose only simplex is the
empty set is called the empty complex here and acts as the identity for
joins.  Vertex labels are arbitrary hashable values and are kept structured
(board squares are (row, col) pairs, join factors are tagged, link vertices
are (from, to) pairs) so exports and cross-checks can inspect them.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from . import params
from .errors import NotASimplexError, SearchBudgetError


def _label_key(v):
    # Deterministic total order over heterogeneous labels.
    if isinstance(v, tuple):
        return ("tuple", tuple(_label_key(x) for x in v))
    return (type(v).__name__, v)


def _simplex_key(s):
    return (len(s), tuple(sorted(_label_key(v) for v in s)))


def _prune_to_maximal(simplices) -> frozenset:
    by_size = sorted({frozenset(s) for s in simplices}, key=len, reverse=True)
    kept: list[frozenset] = []
    for s in by_size:
        if not any(s <= t for t in kept):
            kept.append(s)
    return frozenset(kept)


class SimplicialComplex:
    """A simplicial complex given by its facets."""

    __slots__ = ("_facets", "_vertices", "_faces")

    def __init__(self, facets: Iterable[Iterable] = ()):
        fs = _prune_to_maximal(facets)
        if not fs:
            fs = frozenset({frozenset()})
        self._facets = fs
        self._vertices = frozenset(v for f in fs for v in f)
        self._faces = None

    @property
    def facets(self) -> frozenset:
        return self._facets

    @property
    def vertices(self) -> frozenset:
        return self._vertices

    @property
    def n_vertices(self) -> int:
        return len(self._vertices)

    @property
    def dim(self) -> int:
        """-1 for the empty complex."""
        return max(len(f) for f in self._facets) - 1

    @property
    def is_empty(self) -> bool:
        return not self._vertices

    def faces(self) -> dict[int, tuple[frozenset, ...]]:
        """All simplices by dimension (0..dim), deterministically ordered.

        The empty simplex is implicit and not listed.
        """
        if self._faces is None:
            seen: set[frozenset] = set()
            for f in self._facets:
                items = sorted(f, key=_label_key)
                for k in range(1, len(items) + 1):
                    for combo in itertools.combinations(items, k):
                        seen.add(frozenset(combo))
            out: dict[int, list[frozenset]] = {}
            for s in seen:
                out.setdefault(len(s) - 1, []).append(s)
            self._faces = {
                d: tuple(sorted(out[d], key=_simplex_key)) for d in sorted(out)
            }
        return self._faces

    def f_vector(self) -> tuple[int, ...]:
        faces = self.faces()
        return tuple(len(faces[d]) for d in range(self.dim + 1)) if faces else ()

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * fd for d, fd in enumerate(self.f_vector()))

    def has_simplex(self, s: Iterable) -> bool:
        s = frozenset(s)
        return any(s <= f for f in self._facets)

    def skeleton_edges(self) -> tuple[frozenset, ...]:
        return self.faces().get(1, ())

    def relabel(self, mapping) -> "SimplicialComplex":
        fn = mapping if callable(mapping) else mapping.__getitem__
        return SimplicialComplex(frozenset(fn(v) for v in f) for f in self._facets)

    def facet_lines(self, scheme: str = "") -> list[str]:
        """Plain-text export: header line naming the label scheme, then one
        facet per line as comma-separated sorted labels."""
        header = f"# facets; labels: {scheme or 'str(label)'}"
        lines = [header]
        for f in sorted(self._facets, key=_simplex_key):
            lines.append(",".join(format_label(v) for v in sorted(f, key=_label_key)))
        return lines

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self._facets == other._facets

    def __hash__(self):
        return hash(self._facets)

    def __repr__(self):
        return (
            f"<SimplicialComplex: {self.n_vertices} vertices, "
            f"{len(self._facets)} facets, dim {self.dim}>"
        )


def format_label(v) -> str:
    """Render a structured vertex label for text export."""
    if hasattr(v, "side") and hasattr(v, "index"):
        return f"{v.side}{v.index}"
    if isinstance(v, tuple) and len(v) == 2:
        x, y = v
        if isinstance(x, int) and isinstance(y, int):
            return f"r{x}c{y}"
        if x in (0, 1) and isinstance(y, tuple):
            return f"{'AB'[x]}:{format_label(y)}"
        if hasattr(x, "side") and hasattr(y, "side"):
            return f"{format_label(x)}->{format_label(y)}"
    return str(v)


def chessboard(m: int, n: int) -> SimplicialComplex:
    """The complex of non-attacking rook placements on an m x n board.

    Vertices are squares (row, col), 1-based; a set of squares spans a
    simplex when no two share a row or column.  Facets are the placements
    of min(m, n) rooks; for m = 0 or n = 0 this is the empty complex.
    """
    if m < 0 or n < 0:
        raise ValueError(f"board sides must be non-negative, got ({m}, {n})")
    if m <= n:
        facets = (
            frozenset((i + 1, c) for i, c in enumerate(cols))
            for cols in itertools.permutations(range(1, n + 1), m)
        )
    else:
        facets = (
            frozenset((r, j + 1) for j, r in enumerate(rows))
            for rows in itertools.permutations(range(1, m + 1), n)
        )
    return SimplicialComplex(facets)


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join.  An empty factor is the identity (the other factor is
    returned unchanged); otherwise both factors are relabelled with tags
    (0, v) and (1, w) so the result is deterministic even when the label
    spaces overlap."""
    if K.is_empty:
        return L
    if L.is_empty:
        return K
    return SimplicialComplex(
        frozenset((0, v) for v in fk) | frozenset((1, w) for w in fl)
        for fk in K.facets
        for fl in L.facets
    )


def delete_closed_simplex(K: SimplicialComplex, s: Iterable) -> SimplicialComplex:
    """The full subcomplex on the vertices not in s.

    s must be a simplex of K (the empty set is allowed and is a no-op).
    Every face meeting s is removed, even faces containing only part of s.
    """
    s = frozenset(s)
    if s and not K.has_simplex(s):
        raise NotASimplexError(f"{sorted(s, key=_label_key)} is not a simplex of {K!r}")
    if not s:
        return K
    return SimplicialComplex(f - s for f in K.facets)


def model_link(t: params.SolutionType, n: int, N: int) -> SimplicialComplex:
    """The model link of a type-t vertex: join of the a x (N-b) and
    b x (n-a) rook complexes."""
    d = N - t.b
    c = n - t.a
    if t.a > n or t.b > N or d < 0 or c < 0:
        raise ValueError(f"type {t.as_tuple()} does not fit sides ({n}, {N})")
    return join(chessboard(t.a, d), chessboard(t.b, c))


# ---------------------------------------------------------------------------
# isomorphism


def _refine_colors(vertices, adj, init):
    """Iterated neighborhood color refinement; returns stable vertex colors."""
    color = dict(init)
    while True:
        sig = {
            v: (color[v], tuple(sorted(color[u] for u in adj[v]))) for v in vertices
        }
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: palette[sig[v]] for v in vertices}
        if len(set(new.values())) == len(set(color.values())):
            return new
        color = new


def _adjacency(K: SimplicialComplex):
    adj = {v: set() for v in K.vertices}
    for e in K.skeleton_edges():
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)
    return adj


def are_isomorphic(K: SimplicialComplex, L: SimplicialComplex, budget: int = 200_000) -> bool:
    """Exact isomorphism test by canonical-search backtracking.

    Vertices are pre-partitioned by color refinement over the disjoint
    union; the search extends a vertex bijection most-constrained-first,
    pruning on colors and 1-skeleton adjacency, and accepts only if the
    facet sets correspond exactly.  Raises SearchBudgetError when more than
    `budget` candidate extensions are tried.
    """
    if K.n_vertices != L.n_vertices or K.f_vector() != L.f_vector():
        return False
    if len(K.facets) != len(L.facets):
        return False
    if K.is_empty:
        return True

    # Color refinement over the disjoint union keeps colors comparable.
    verts = [("K", v) for v in K.vertices] + [("L", v) for v in L.vertices]
    adjK, adjL = _adjacency(K), _adjacency(L)
    adj = {("K", v): {("K", u) for u in adjK[v]} for v in K.vertices}
    adj.update({("L", v): {("L", u) for u in adjL[v]} for v in L.vertices})
    init = {}
    for tag, C in (("K", K), ("L", L)):
        for v in C.vertices:
            sizes = tuple(sorted(len(f) for f in C.facets if v in f))
            init[(tag, v)] = sizes
    palette = {s: i for i, s in enumerate(sorted(set(init.values())))}
    color = _refine_colors(verts, adj, {v: palette[init[v]] for v in init})

    colK = {v: color[("K", v)] for v in K.vertices}
    colL = {v: color[("L", v)] for v in L.vertices}
    if sorted(colK.values()) != sorted(colL.values()):
        return False

    by_color: dict[int, list] = {}
    for v in L.vertices:
        by_color.setdefault(colL[v], []).append(v)

    # Order K's vertices most-constrained-first: rarest color, then greedily
    # by number of already-ordered neighbors.
    order: list = []
    placed = set()
    remaining = set(K.vertices)
    while remaining:
        u = min(
            remaining,
            key=lambda x: (
                -sum(1 for y in adjK[x] if y in placed),
                len(by_color[colK[x]]),
                _label_key(x),
            ),
        )
        order.append(u)
        placed.add(u)
        remaining.remove(u)

    phi: dict = {}
    used: set = set()
    nodes = 0

    def extend(i: int) -> bool:
        nonlocal nodes
        if i == len(order):
            mapped = frozenset(frozenset(phi[v] for v in f) for f in K.facets)
            return mapped == L.facets
        u = order[i]
        for v in by_color[colK[u]]:
            if v in used:
                continue
            nodes += 1
            if nodes > budget:
                raise SearchBudgetError(
                    f"isomorphism search exceeded budget of {budget} nodes"
                )
            ok = all((w in adjK[u]) == (phi[w] in adjL[v]) for w in phi)
            if not ok:
                continue
            phi[u] = v
            used.add(v)
            if extend(i + 1):
                return True
            del phi[u]
            used.remove(v)
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# vertex decomposability


def is_vertex_decomposable(K: SimplicialComplex, budget: int = 100_000):
    """Recursive vertex-decomposability test (non-pure definition).

    A complex is vertex decomposable when it is a simplex, or when some
    shedding vertex v has both its deletion and its link vertex
    decomposable, where no facet of the link is a facet of the deletion.
    Returns True, False, or None when the search budget runs out.
    Memoized on the exact facet sets encountered.
    """
    memo: dict[frozenset, bool] = {}
    counter = [budget]

    def rec(facets: frozenset):
        if facets in memo:
            return memo[facets]
        if len(facets) == 1:
            memo[facets] = True
            return True
        if counter[0] <= 0:
            return None
        counter[0] -= 1

        verts = sorted({v for f in facets for v in f}, key=_label_key)
        saw_unknown = False
        for v in verts:
            link = frozenset(f - {v} for f in facets if v in f)
            if not link:
                continue  # v in no facet: impossible once facets are pruned
            deletion = _prune_to_maximal(
                [f for f in facets if v not in f] + [f - {v} for f in facets if v in f]
            )
            if any(g in deletion for g in link):
                continue  # not a shedding vertex
            a = rec(link)
            if a is None:
                saw_unknown = True
                continue
            if not a:
                continue
            b = rec(deletion)
            if b is None:
                saw_unknown = True
                continue
            if b:
                memo[facets] = True
                return True
        if saw_unknown:
            return None
        memo[facets] = False
        return False

    return rec(K.facets)
