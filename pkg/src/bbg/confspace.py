"""Discrete configuration spaces of robots on complete bipartite graphs.

The space for r robots on K_{n,N} is a cube complex.  A d-cell is an
unordered set of r pairwise-disjoint objects: r - d occupied vertices
(stationary robots) and d closed edges (robots in motion), where disjoint
means no two objects share a graph vertex.  The d moving edges make the
cell a d-cube; its facets replace one moving edge by one of its endpoints.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import networkx as nx

from . import params, simplicial
from .errors import MembershipError, ParameterError, ResourceLimitError

DEFAULT_MAX_ZERO_CELLS = 10**6


class Vertex(NamedTuple):
    side: str  # "L" or "R"
    index: int  # 1-based

    def __str__(self):
        return f"{self.side}{self.index}"


class Edge(NamedTuple):
    left: Vertex
    right: Vertex

    def __str__(self):
        return f"({self.left}-{self.right})"


@dataclass(frozen=True)
class BipartiteGraph:
    """K_{n,N} with left vertices L1..Ln and right vertices R1..RN."""

    n: int
    N: int

    def left(self) -> tuple[Vertex, ...]:
        return tuple(Vertex("L", i) for i in range(1, self.n + 1))

    def right(self) -> tuple[Vertex, ...]:
        return tuple(Vertex("R", j) for j in range(1, self.N + 1))

    def vertices(self) -> tuple[Vertex, ...]:
        return self.left() + self.right()

    def edges(self) -> tuple[Edge, ...]:
        return tuple(Edge(u, w) for u in self.left() for w in self.right())


@dataclass(frozen=True)
class CubeCell:
    """An unordered cell: stationary occupied vertices plus moving edges.

    Tuples are kept sorted so equal cells compare and hash equal.
    """

    stationary: tuple[Vertex, ...]
    moving: tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "stationary", tuple(sorted(self.stationary)))
        object.__setattr__(self, "moving", tuple(sorted(self.moving)))
        support = list(self.stationary)
        for e in self.moving:
            support.extend((e.left, e.right))
        if len(support) != len(set(support)):
            raise ParameterError(f"cell objects are not pairwise disjoint: {self}")

    @property
    def dim(self) -> int:
        return len(self.moving)

    @property
    def robots(self) -> int:
        return len(self.stationary) + len(self.moving)

    def __str__(self):
        stat = ",".join(str(v) for v in self.stationary)
        mov = ",".join(str(e) for e in self.moving)
        return f"{self.dim}; {stat}; {mov}"


class CubeComplex:
    """The configuration cube complex, cells listed per dimension."""

    def __init__(self, r: int, n: int, N: int, cells_by_dim: dict[int, list[CubeCell]]):
        self.r = r
        self.n = n
        self.N = N
        self.graph = BipartiteGraph(n, N)
        self._cells = {
            d: tuple(sorted(cs, key=lambda c: (c.stationary, c.moving)))
            for d, cs in cells_by_dim.items()
            if cs
        }
        self._sets = {d: frozenset(cs) for d, cs in self._cells.items()}

    @property
    def dim(self) -> int:
        return max(self._cells, default=-1)

    def cells(self, d: int) -> tuple[CubeCell, ...]:
        return self._cells.get(d, ())

    def zero_cells(self) -> tuple[CubeCell, ...]:
        return self.cells(0)

    def all_cells(self):
        for d in sorted(self._cells):
            yield from self._cells[d]

    def contains(self, cell: CubeCell) -> bool:
        return cell in self._sets.get(cell.dim, frozenset())

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.cells(d)) for d in range(self.dim + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * fd for d, fd in enumerate(self.f_vector()))

    def cell_boundary(self, cell: CubeCell) -> list[tuple[int, CubeCell]]:
        """Signed cubical boundary: for the k-th moving edge (by the cell's
        sorted order), +/-(-1)^k times the facet where the robot stops on
        the right/left endpoint."""
        out = []
        for k, e in enumerate(cell.moving):
            rest = cell.moving[:k] + cell.moving[k + 1 :]
            sign = -1 if k % 2 else 1
            out.append((sign, CubeCell(cell.stationary + (e.right,), rest)))
            out.append((-sign, CubeCell(cell.stationary + (e.left,), rest)))
        return out

    def cell_lines(self) -> list[str]:
        """Text export, one cell per line: dim; stationary; moving."""
        lines = ["# cube cells: dim; stationary vertices; moving edges"]
        lines.extend(str(c) for c in self.all_cells())
        return lines

    def __repr__(self):
        return f"<CubeComplex Conf_{self.r}({self.n},{self.N}): f={self.f_vector()}>"


def build_conf(
    r: int, n: int, N: int, max_zero_cells: int = DEFAULT_MAX_ZERO_CELLS
) -> CubeComplex:
    """Build the configuration cube complex of r robots on K_{n,N}.

    Refuses (ResourceLimitError) when the 0-cell count C(n+N, r) exceeds
    max_zero_cells.
    """
    if min(r, n, N) < 1:
        raise ParameterError(f"need r, n, N >= 1, got ({r}, {n}, {N})")
    if r > n + N:
        raise ParameterError(f"cannot place {r} robots on {n}+{N} vertices")
    count0 = math.comb(n + N, r)
    if count0 > max_zero_cells:
        raise ResourceLimitError(
            f"Conf_{r}({n},{N}) has {count0} 0-cells, over the cap {max_zero_cells}"
        )

    g = BipartiteGraph(n, N)
    left, right = g.left(), g.right()
    cells_by_dim: dict[int, list[CubeCell]] = {}
    for d in range(0, min(r, n, N) + 1):
        cells = []
        for lsub in itertools.combinations(left, d):
            for rsub in itertools.combinations(right, d):
                for perm in itertools.permutations(rsub):
                    moving = tuple(Edge(u, w) for u, w in zip(lsub, perm))
                    used = set(lsub) | set(rsub)
                    free = [v for v in left + right if v not in used]
                    for stat in itertools.combinations(free, r - d):
                        cells.append(CubeCell(stat, moving))
        if cells:
            cells_by_dim[d] = cells
    return CubeComplex(r, n, N, cells_by_dim)


def f_vector(C: CubeComplex) -> tuple[tuple[int, ...], int]:
    """The f-vector together with the Euler characteristic."""
    return C.f_vector(), C.euler_characteristic()


def classify_zero_cell(C: CubeComplex, v: CubeCell) -> params.SolutionType:
    """The side-count type (a, b, c, d) of a 0-cell."""
    if v.dim != 0 or not C.contains(v):
        raise MembershipError(f"{v} is not a 0-cell of {C!r}")
    a = sum(1 for u in v.stationary if u.side == "L")
    b = len(v.stationary) - a
    return params.SolutionType(a, b, C.n - a, C.N - b)


def vertex_link(C: CubeComplex, v: CubeCell) -> simplicial.SimplicialComplex:
    """The link of a 0-cell: a k-simplex per (k+1)-cell containing v.

    A cell contains v exactly when its stationary set is part of v's
    occupied set and each moving edge has exactly one occupied endpoint.
    Link vertices are labelled (occupied endpoint, target endpoint).
    """
    if v.dim != 0 or not C.contains(v):
        raise MembershipError(f"{v} is not a 0-cell of {C!r}")
    occupied = set(v.stationary)
    simplices = []
    for d in range(1, C.dim + 1):
        for c in C.cells(d):
            if not set(c.stationary) <= occupied:
                continue
            pairs = []
            for e in c.moving:
                inl, inr = e.left in occupied, e.right in occupied
                if inl == inr:
                    break
                pairs.append((e.left, e.right) if inl else (e.right, e.left))
            else:
                simplices.append(frozenset(pairs))
    return simplicial.SimplicialComplex(simplices)


def is_flag(K: simplicial.SimplicialComplex) -> bool:
    """Gromov flag condition: every clique of the 1-skeleton spans a simplex.

    Checking maximal cliques suffices because complexes are downward closed.
    """
    g = nx.Graph()
    g.add_nodes_from(K.vertices)
    g.add_edges_from(tuple(e) for e in K.skeleton_edges())
    return all(K.has_simplex(q) for q in nx.find_cliques(g))
