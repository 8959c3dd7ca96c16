"""Cube complexes of robots on complete bipartite graphs."""

import math
from collections import Counter

import pytest

from bbg import (
    BipartiteGraph,
    CubeCell,
    Edge,
    MembershipError,
    ParameterError,
    ResourceLimitError,
    SimplicialComplex,
    Vertex,
    are_isomorphic,
    build_conf,
    classify_zero_cell,
    is_flag,
    model_link,
    vertex_link,
)


def closed_f(r, n, N, d):
    # stationary robots choose free vertices after the moving edges are laid
    return (
        math.comb(n, d)
        * math.comb(N, d)
        * math.factorial(d)
        * math.comb(n + N - 2 * d, r - d)
    )


def test_bipartite_graph():
    g = BipartiteGraph(2, 3)
    assert len(g.left()) == 2 and len(g.right()) == 3
    assert len(g.vertices()) == 5
    assert len(g.edges()) == 6
    assert str(Vertex("L", 1)) == "L1"
    assert str(Edge(Vertex("L", 1), Vertex("R", 2))) == "(L1-R2)"


def test_cube_cell_normalization():
    a, b = Vertex("L", 2), Vertex("L", 1)
    c = CubeCell((a, b))
    assert c.stationary == (b, a)
    assert c.dim == 0 and c.robots == 2
    e = Edge(Vertex("L", 3), Vertex("R", 1))
    m = CubeCell((a,), (e,))
    assert m.dim == 1 and m.robots == 2
    assert str(m) == "1; L2; (L3-R1)"


def test_cube_cell_disjointness():
    v = Vertex("L", 1)
    e = Edge(v, Vertex("R", 1))
    with pytest.raises(ParameterError):
        CubeCell((v,), (e,))  # L1 both occupied and moving
    with pytest.raises(ParameterError):
        CubeCell((), (e, Edge(v, Vertex("R", 2))))  # two edges sharing L1


def test_build_conf_counts():
    for r in range(1, 4):
        for n in range(1, 5):
            for N in range(1, 5):
                if r > n + N:
                    continue
                C = build_conf(r, n, N)
                want = [closed_f(r, n, N, d) for d in range(min(r, n, N) + 1)]
                while want and want[-1] == 0:
                    want.pop()
                assert C.f_vector() == tuple(want), (r, n, N)
                assert C.dim == len(want) - 1


def test_build_conf_known_f_vectors():
    assert build_conf(2, 3, 3).f_vector() == (15, 36, 18)
    assert build_conf(3, 4, 5).f_vector() == (84, 420, 600, 240)


def test_build_conf_validation():
    with pytest.raises(ParameterError):
        build_conf(0, 2, 2)
    with pytest.raises(ParameterError):
        build_conf(5, 2, 2)
    with pytest.raises(ResourceLimitError):
        build_conf(4, 5, 5, max_zero_cells=100)  # C(10,4) = 210


def test_boundary_closure():
    C = build_conf(2, 2, 3)
    for d in range(1, C.dim + 1):
        for cell in C.cells(d):
            for _, facet in C.cell_boundary(cell):
                assert C.contains(facet), (cell, facet)


def test_boundary_squares_to_zero():
    C = build_conf(2, 2, 2)
    for cell in C.cells(2):
        acc = Counter()
        for s1, facet in C.cell_boundary(cell):
            for s2, sub in C.cell_boundary(facet):
                acc[sub] += s1 * s2
        assert all(v == 0 for v in acc.values()), cell


def test_classify_zero_cell_counts():
    C = build_conf(3, 4, 5)
    tally = Counter(
        classify_zero_cell(C, v).as_tuple() for v in C.zero_cells()
    )
    for (a, b, c, d), count in tally.items():
        assert count == math.comb(4, a) * math.comb(5, b)
    assert sum(tally.values()) == math.comb(9, 3)


def test_classify_zero_cell_membership():
    C = build_conf(2, 2, 2)
    foreign = CubeCell((Vertex("L", 1), Vertex("L", 9)))
    with pytest.raises(MembershipError):
        classify_zero_cell(C, foreign)
    one_cell = C.cells(1)[0]
    with pytest.raises(MembershipError):
        classify_zero_cell(C, one_cell)


def test_vertex_link_matches_model():
    C = build_conf(2, 2, 2)
    for v in C.zero_cells():
        t = classify_zero_cell(C, v)
        L = vertex_link(C, v)
        assert are_isomorphic(L, model_link(t, C.n, C.N)), v


def test_vertex_link_size():
    # one link vertex per 1-cell having v in its boundary
    C = build_conf(2, 3, 3)
    for v in C.zero_cells():
        L = vertex_link(C, v)
        through = sum(
            1
            for c in C.cells(1)
            if any(facet == v for _, facet in C.cell_boundary(c))
        )
        assert L.f_vector()[0] == through, v


def test_is_flag():
    full = SimplicialComplex([[1, 2, 3]])
    assert is_flag(full)
    hollow = SimplicialComplex([[1, 2], [2, 3], [1, 3]])
    assert not is_flag(hollow)
    assert is_flag(SimplicialComplex([[1, 2], [3, 4]]))


def test_conf_links_are_flag():
    C = build_conf(2, 3, 3)
    assert all(is_flag(vertex_link(C, v)) for v in C.zero_cells())


def test_cell_lines():
    C = build_conf(2, 2, 2)
    lines = C.cell_lines()
    assert lines[0] == "# cube cells: dim; stationary vertices; moving edges"
    assert len(lines) == 1 + sum(C.f_vector())
    assert "0; L1,L2; " in lines
    # stable ordering across rebuilds
    assert lines == build_conf(2, 2, 2).cell_lines()
