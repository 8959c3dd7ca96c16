"""Exact reduced integer homology via Smith normal form.

Chain complexes here always carry the augmentation row (the boundary from
degree 0 to degree -1), so every Betti number is reduced: a point has no
homology at all, the empty complex has H~_{-1} = Z.  Boundary compositions
are verified to vanish at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import confspace, simplicial
from .snf import smith_normal_form


class _Contractible:
    """Sentinel for 'no reduced homology through the top dimension'.

    Compares greater than every integer so bound checks read naturally.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "CONTRACTIBLE"

    def __gt__(self, other):
        return isinstance(other, int) or other is not self

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self


CONTRACTIBLE = _Contractible()


class ChainComplex:
    """Bases and sparse integer boundary matrices of a complex.

    matrix index d runs 0..top_dim; matrix d maps degree-d chains to
    degree-(d-1) chains, with d = 0 the all-ones augmentation row.
    """

    def __init__(self, basis: dict[int, tuple], columns: dict[int, list]):
        # columns[d][j] is a tuple of (row_index, coefficient) pairs.
        self.basis = basis
        self.top_dim = max(basis, default=-1)
        self._columns = columns
        self._check_compositions()

    def counts(self) -> tuple[int, ...]:
        return tuple(len(self.basis[d]) for d in range(self.top_dim + 1))

    def shape(self, d: int) -> tuple[int, int]:
        nrows = 1 if d == 0 else len(self.basis.get(d - 1, ()))
        return (nrows, len(self.basis.get(d, ())))

    def boundary_matrix(self, d: int) -> list[list[int]]:
        """Dense rows of the degree-d boundary."""
        nr, nc = self.shape(d)
        out = [[0] * nc for _ in range(nr)]
        for j, col in enumerate(self._columns.get(d, [])):
            for i, coef in col:
                out[i][j] = coef
        return out

    def triplet_lines(self, d: int) -> list[str]:
        """Sparse export: header, then 'row col value' per nonzero entry."""
        nr, nc = self.shape(d)
        lines = [f"# boundary degree {d}: {nr} x {nc}, entries 'row col value'"]
        for j, col in enumerate(self._columns.get(d, [])):
            for i, coef in col:
                lines.append(f"{i} {j} {coef}")
        return lines

    def _check_compositions(self):
        for d in range(0, self.top_dim + 1):
            lower = self._columns.get(d, [])
            upper = self._columns.get(d + 1, [])
            for col in upper:
                acc: dict[int, int] = {}
                for i, coef in col:
                    for ii, c2 in lower[i]:
                        acc[ii] = acc.get(ii, 0) + coef * c2
                if any(acc.values()):
                    raise AssertionError(
                        f"boundary composition in degrees {d + 1},{d} is nonzero"
                    )


def _simplicial_chain_complex(K: simplicial.SimplicialComplex) -> ChainComplex:
    faces = K.faces()
    basis = {d: faces[d] for d in faces}
    index = {
        d: {s: i for i, s in enumerate(basis[d])} for d in basis
    }
    columns: dict[int, list] = {}
    if 0 in basis:
        columns[0] = [((0, 1),) for _ in basis[0]]
    for d in range(1, K.dim + 1):
        cols = []
        for s in basis[d]:
            items = sorted(s, key=simplicial._label_key)
            col = []
            for k, v in enumerate(items):
                face = frozenset(items[:k] + items[k + 1 :])
                col.append((index[d - 1][face], -1 if k % 2 else 1))
            cols.append(tuple(col))
        columns[d] = cols
    return ChainComplex(basis, columns)


def _cubical_chain_complex(C: confspace.CubeComplex) -> ChainComplex:
    basis = {d: C.cells(d) for d in range(C.dim + 1) if C.cells(d)}
    index = {d: {c: i for i, c in enumerate(basis[d])} for d in basis}
    columns: dict[int, list] = {}
    if 0 in basis:
        columns[0] = [((0, 1),) for _ in basis[0]]
    for d in range(1, C.dim + 1):
        cols = []
        for cell in basis[d]:
            col = tuple(
                (index[d - 1][facet], sign) for sign, facet in C.cell_boundary(cell)
            )
            cols.append(col)
        columns[d] = cols
    return ChainComplex(basis, columns)


def chain_complex(X) -> ChainComplex:
    """Augmented chain complex of a simplicial or cube complex."""
    if isinstance(X, simplicial.SimplicialComplex):
        return _simplicial_chain_complex(X)
    if isinstance(X, confspace.CubeComplex):
        return _cubical_chain_complex(X)
    raise TypeError(f"cannot build a chain complex from {type(X).__name__}")


@dataclass(frozen=True)
class HomologyResult:
    """Reduced homology: free ranks and torsion per degree.

    betti has keys -1..top_dim (degree -1 is nonzero only for the empty
    complex); torsion values are the invariant factors > 1 in divisibility
    order.
    """

    betti: dict[int, int]
    torsion: dict[int, tuple[int, ...]]
    counts: tuple[int, ...]
    top_dim: int

    def is_trivial_through(self, degree: int) -> bool:
        return all(
            self.betti.get(d, 0) == 0 and not self.torsion.get(d, ())
            for d in range(-1, degree + 1)
        )

    def nonzero_degrees(self) -> list[int]:
        return [
            d
            for d in range(-1, self.top_dim + 1)
            if self.betti.get(d, 0) or self.torsion.get(d, ())
        ]


def reduced_homology(cc: ChainComplex) -> HomologyResult:
    """Betti numbers and torsion of an augmented chain complex."""
    D = cc.top_dim
    rank = {}
    factors = {}
    for d in range(0, D + 1):
        nr, nc = cc.shape(d)
        if nr == 0 or nc == 0:
            rank[d], factors[d] = 0, ()
        else:
            res = smith_normal_form(cc.boundary_matrix(d))
            rank[d], factors[d] = res.rank, res.factors
    rank[D + 1], factors[D + 1] = 0, ()

    counts = cc.counts()
    betti = {-1: 1 - rank.get(0, 0)}
    torsion: dict[int, tuple[int, ...]] = {}
    for d in range(0, D + 1):
        betti[d] = counts[d] - rank[d] - rank[d + 1]
        tor = tuple(x for x in factors[d + 1] if x > 1)
        if tor:
            torsion[d] = tor
        if betti[d] < 0:
            raise AssertionError(f"negative Betti number in degree {d}")

    euler = sum((-1) ** d * f for d, f in enumerate(counts))
    reduced_euler = sum((-1) ** d * b for d, b in betti.items())
    if euler != 1 + reduced_euler:
        raise AssertionError("Euler characteristic inconsistent with Betti numbers")

    return HomologyResult(betti, torsion, counts, D)


def homological_connectivity(H: HomologyResult, topdim: int | None = None):
    """(first degree with nonzero reduced homology) - 1.

    The empty complex gives -2; if nothing is nonzero through topdim the
    CONTRACTIBLE sentinel is returned.
    """
    if topdim is None:
        topdim = H.top_dim
    for d in range(-1, topdim + 1):
        if H.betti.get(d, 0) or H.torsion.get(d, ()):
            return d - 1
    return CONTRACTIBLE


def homology_of(X) -> HomologyResult:
    """Convenience: reduced homology straight from a complex."""
    return reduced_homology(chain_complex(X))
