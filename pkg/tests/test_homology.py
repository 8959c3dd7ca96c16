"""Exact reduced homology over the integers, with torsion."""

import itertools
import random

import pytest

from bbg import (
    CONTRACTIBLE,
    SimplicialComplex,
    build_conf,
    chain_complex,
    chessboard,
    homological_connectivity,
    homology_of,
    join,
    reduced_homology,
)


def nonzero(H):
    out = {}
    for d in range(-1, H.top_dim + 1):
        b = H.betti.get(d, 0)
        t = H.torsion.get(d, ())
        if b or t:
            out[d] = (b, t)
    return out


def test_contractible_sentinel():
    assert CONTRACTIBLE >= 100
    assert CONTRACTIBLE >= -2
    assert CONTRACTIBLE >= CONTRACTIBLE
    assert not (CONTRACTIBLE < 5)


def test_empty_complex():
    H = homology_of(SimplicialComplex())
    assert H.betti == {-1: 1}
    assert H.top_dim == -1
    assert homological_connectivity(H) == -2


def test_point_is_contractible():
    H = homology_of(SimplicialComplex([[0]]))
    assert nonzero(H) == {}
    assert homological_connectivity(H) is CONTRACTIBLE
    assert H.is_trivial_through(H.top_dim)


def test_two_points():
    H = homology_of(SimplicialComplex([[0], [1]]))
    assert nonzero(H) == {0: (1, ())}
    assert homological_connectivity(H) == -1


def test_circle():
    H = homology_of(chessboard(2, 3))  # hexagon
    assert nonzero(H) == {1: (1, ())}
    assert homological_connectivity(H) == 0


def test_sphere():
    tetra_boundary = SimplicialComplex(itertools.combinations(range(4), 3))
    H = homology_of(tetra_boundary)
    assert nonzero(H) == {2: (1, ())}
    assert homological_connectivity(H) == 1


def test_projective_plane_torsion():
    rp2 = SimplicialComplex(
        [
            (1, 2, 3),
            (1, 2, 4),
            (1, 3, 5),
            (1, 4, 6),
            (1, 5, 6),
            (2, 3, 6),
            (2, 4, 5),
            (2, 5, 6),
            (3, 4, 5),
            (3, 4, 6),
        ]
    )
    assert rp2.f_vector() == (6, 15, 10)
    H = homology_of(rp2)
    assert nonzero(H) == {1: (0, (2,))}
    assert homological_connectivity(H) == 0  # torsion counts as nonzero


CHESSBOARD_HOMOLOGY = {
    (1, 1): {},
    (2, 2): {0: (1, ())},
    (2, 3): {1: (1, ())},
    (2, 4): {1: (5, ())},
    (2, 5): {1: (11, ())},
    (3, 3): {1: (4, ())},
    (3, 4): {1: (2, ()), 2: (1, ())},
    (3, 5): {2: (14, ())},
    (4, 4): {2: (15, ())},
}


def test_chessboard_homology_table():
    for (m, n), want in CHESSBOARD_HOMOLOGY.items():
        H = homology_of(chessboard(m, n))
        assert nonzero(H) == want, (m, n)


def test_surface_of_two_robots_on_k33():
    C = build_conf(2, 3, 3)
    H = homology_of(C)
    assert H.counts == (15, 36, 18)
    assert nonzero(H) == {1: (4, (2,))}


def test_one_robot_cycle():
    # a single robot on K_{2,2} traces the 4-cycle
    H = homology_of(build_conf(1, 2, 2))
    assert H.counts == (4, 4)
    assert nonzero(H) == {1: (1, ())}


def test_connectivity_topdim_cutoff():
    H = homology_of(chessboard(2, 3))
    assert homological_connectivity(H, topdim=0) is CONTRACTIBLE
    assert homological_connectivity(H, topdim=1) == 0


def test_chain_complex_shapes():
    cc = chain_complex(chessboard(2, 2))
    assert cc.shape(0) == (1, 4)  # augmentation row
    assert cc.shape(1) == (4, 2)
    M = cc.boundary_matrix(0)
    assert M == [[1, 1, 1, 1]]


def test_chain_complex_rejects_other_types():
    with pytest.raises(TypeError):
        chain_complex([[1, 2]])


def random_complex(rng, n_verts=4, n_facets=3):
    verts = range(n_verts)
    facets = []
    for _ in range(rng.randint(1, n_facets)):
        k = rng.randint(1, n_verts)
        facets.append(rng.sample(verts, k))
    return SimplicialComplex(facets)


def test_join_connectivity_bound():
    # joining shifts connectivity superadditively, with an offset of two
    rng = random.Random(424242)
    for _ in range(30):
        K = random_complex(rng)
        L = random_complex(rng)
        hK = homological_connectivity(homology_of(K))
        hL = homological_connectivity(homology_of(L))
        hJ = homological_connectivity(homology_of(join(K, L)))
        if hK is CONTRACTIBLE or hL is CONTRACTIBLE:
            assert hJ is CONTRACTIBLE, (K, L)
        else:
            assert hJ >= hK + hL + 2, (K, L, hJ, hK, hL)


def test_join_of_spheres():
    s0 = SimplicialComplex([[0], [1]])
    H = homology_of(join(s0, s0))  # the 4-cycle
    assert nonzero(H) == {1: (1, ())}
    H2 = homology_of(join(join(s0, s0), s0))  # octahedron
    assert nonzero(H2) == {2: (1, ())}


def test_euler_betti_consistency():
    rng = random.Random(11)
    for _ in range(25):
        K = random_complex(rng, n_verts=5, n_facets=4)
        H = homology_of(K)
        chi = K.euler_characteristic()
        reduced = sum((-1) ** d * b for d, b in H.betti.items())
        assert chi == 1 + reduced


def test_reduced_homology_entrypoint():
    H = reduced_homology(chain_complex(chessboard(3, 3)))
    assert H.betti[1] == 4
    assert H.nonzero_degrees() == [1]
