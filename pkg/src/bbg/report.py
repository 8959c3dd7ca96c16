"""Connectivity-at-infinity reports, one structured document per parameter set.

A report collects everything this package can say about Conf_r(n, N): the
symmetry orbit and canonical form, the index ell with its three minimands,
the connectivity-at-infinity statement, duality and exceptional-case flags,
and a per-solution-type table of model links with their connectivity lower
bounds and, when cheap or when forced, exact link homology.

Reports serialize to JSON under the versioned schema "bbg-report/1".
Rendering is deterministic (identical inputs give byte-identical text) and
lossless (parsing a rendered report yields an equal Report).  Integers that
could exceed the 2^53 range where JSON numbers stay exact are written as
decimal strings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb, factorial

from . import confspace, params, simplicial
from .errors import ConsistencyError, ParameterError
from .homology import CONTRACTIBLE, homological_connectivity, homology_of

SCHEMA = "bbg-report/1"

# 0-cell count above which the cube complex is not materialized by default.
DEFAULT_BUILD_CAP = 20_000
# 0-cell count above which the per-vertex flag check is skipped.
DEFAULT_FLAG_CAP = 300
# Model-link face count above which link homology is skipped unless forced.
DEFAULT_HOMOLOGY_CAP = 3_000

_JSON_INT_MAX = 1 << 53


def _enc_int(x):
    if x is None:
        return None
    return x if abs(x) <= _JSON_INT_MAX else str(x)


def _dec_int(x):
    return None if x is None else int(x)


def model_link_face_count(t: params.SolutionType) -> int:
    """Nonempty faces of the model link of type t, counted without building it."""

    def board(m, n):
        return [comb(m, k) * comb(n, k) * factorial(k) for k in range(min(m, n) + 1)]

    A = board(t.a, t.d)
    B = board(t.b, t.c)
    return sum(x * y for x in A for y in B) - 1


@dataclass(frozen=True)
class TypeRow:
    """One row of the per-type table.

    factors are the two chessboard sizes (a, d) and (b, c) whose join models
    the link; homology fields stay None until computed.  betti lists only
    nonzero reduced ranks as (degree, rank) pairs; torsion lists (degree,
    invariant factors) pairs.
    """

    type: params.SolutionType
    factors: tuple[tuple[int, int], tuple[int, int]]
    link: str
    nus: tuple[int, int]
    bound: int
    hconn: object = None
    betti: tuple[tuple[int, int], ...] | None = None
    torsion: tuple[tuple[int, tuple[int, ...]], ...] | None = None


@dataclass(frozen=True)
class Report:
    parameters: params.Parameters
    orbit: tuple[params.Parameters, ...]
    canonical: params.Parameters
    dimension: int
    note: str | None
    ell: int | None
    ell_terms: tuple[int, int, int] | None
    statement: str | None
    duality: bool | None
    exceptional: bool | None
    exceptional_witness: params.SolutionType | None
    types: tuple[TypeRow, ...]
    built: bool
    f_vector: tuple[int, ...] | None
    euler: int | None
    flag_ok: bool | None

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "parameters": [_enc_int(v) for v in self.parameters.as_tuple()],
            "orbit": [[_enc_int(v) for v in q.as_tuple()] for q in self.orbit],
            "canonical": [_enc_int(v) for v in self.canonical.as_tuple()],
            "dimension": _enc_int(self.dimension),
            "note": self.note,
            "ell": _enc_int(self.ell),
            "ell_terms": None
            if self.ell_terms is None
            else [_enc_int(v) for v in self.ell_terms],
            "statement": self.statement,
            "duality": self.duality,
            "exceptional": self.exceptional,
            "exceptional_witness": None
            if self.exceptional_witness is None
            else [_enc_int(v) for v in self.exceptional_witness.as_tuple()],
            "types": [_type_row_to_dict(row) for row in self.types],
            "built": self.built,
            "f_vector": None
            if self.f_vector is None
            else [_enc_int(v) for v in self.f_vector],
            "euler": _enc_int(self.euler),
            "flag_ok": self.flag_ok,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "Report":
        if doc.get("schema") != SCHEMA:
            raise ParameterError(
                f"unsupported report schema {doc.get('schema')!r}, expected {SCHEMA!r}"
            )
        return cls(
            parameters=params.Parameters(*(_dec_int(v) for v in doc["parameters"])),
            orbit=tuple(
                params.Parameters(*(_dec_int(v) for v in q)) for q in doc["orbit"]
            ),
            canonical=params.Parameters(*(_dec_int(v) for v in doc["canonical"])),
            dimension=_dec_int(doc["dimension"]),
            note=doc["note"],
            ell=_dec_int(doc["ell"]),
            ell_terms=None
            if doc["ell_terms"] is None
            else tuple(_dec_int(v) for v in doc["ell_terms"]),
            statement=doc["statement"],
            duality=doc["duality"],
            exceptional=doc["exceptional"],
            exceptional_witness=None
            if doc["exceptional_witness"] is None
            else params.SolutionType(*(_dec_int(v) for v in doc["exceptional_witness"])),
            types=tuple(_type_row_from_dict(d) for d in doc["types"]),
            built=doc["built"],
            f_vector=None
            if doc["f_vector"] is None
            else tuple(_dec_int(v) for v in doc["f_vector"]),
            euler=_dec_int(doc["euler"]),
            flag_ok=doc["flag_ok"],
        )


def _type_row_to_dict(row: TypeRow) -> dict:
    if row.hconn is None:
        hconn = None
    elif row.hconn is CONTRACTIBLE:
        hconn = "contractible"
    else:
        hconn = _enc_int(row.hconn)
    return {
        "type": [_enc_int(v) for v in row.type.as_tuple()],
        "factors": [[_enc_int(v) for v in pair] for pair in row.factors],
        "link": row.link,
        "nus": [_enc_int(v) for v in row.nus],
        "bound": _enc_int(row.bound),
        "hconn": hconn,
        "betti": None
        if row.betti is None
        else [[_enc_int(d), _enc_int(b)] for d, b in row.betti],
        "torsion": None
        if row.torsion is None
        else [[_enc_int(d), [_enc_int(f) for f in fs]] for d, fs in row.torsion],
    }


def _type_row_from_dict(d: dict) -> TypeRow:
    raw = d["hconn"]
    if raw is None:
        hconn = None
    elif raw == "contractible":
        hconn = CONTRACTIBLE
    else:
        hconn = _dec_int(raw)
    return TypeRow(
        type=params.SolutionType(*(_dec_int(v) for v in d["type"])),
        factors=tuple(tuple(_dec_int(v) for v in pair) for pair in d["factors"]),
        link=d["link"],
        nus=tuple(_dec_int(v) for v in d["nus"]),
        bound=_dec_int(d["bound"]),
        hconn=hconn,
        betti=None
        if d["betti"] is None
        else tuple((_dec_int(deg), _dec_int(b)) for deg, b in d["betti"]),
        torsion=None
        if d["torsion"] is None
        else tuple(
            (_dec_int(deg), tuple(_dec_int(f) for f in fs)) for deg, fs in d["torsion"]
        ),
    )


def _build_type_row(
    t: params.SolutionType, p: params.Parameters, force: bool, homology_cap: int
) -> TypeRow:
    nus = (params.nu(t.a, t.d), params.nu(t.b, t.c))
    bound = params.link_lower_bound(t)
    link = f"Delta({t.a},{t.d}) * Delta({t.b},{t.c})"
    hconn = betti = torsion = None
    if force or model_link_face_count(t) <= homology_cap:
        L = simplicial.model_link(t, p.n, p.N)
        H = homology_of(L)
        hconn = homological_connectivity(H)
        if not hconn >= bound:
            raise ConsistencyError(
                f"link homology of type {t.as_tuple()} contradicts its lower "
                f"bound: hconn {hconn} < {bound}"
            )
        betti = tuple((deg, b) for deg, b in sorted(H.betti.items()) if b)
        torsion = tuple((deg, fs) for deg, fs in sorted(H.torsion.items()))
    return TypeRow(t, ((t.a, t.d), (t.b, t.c)), link, nus, bound, hconn, betti, torsion)


def build_report(
    r: int,
    n: int,
    N: int,
    allow_trivial: bool = False,
    homology: bool = False,
    max_zero_cells: int = DEFAULT_BUILD_CAP,
    homology_cap: int = DEFAULT_HOMOLOGY_CAP,
    flag_cap: int = DEFAULT_FLAG_CAP,
) -> Report:
    """Assemble the full report for r robots on K_{n,N}.

    Trivial parameters raise unless allow_trivial, in which case the
    connectivity formulas are skipped and a note says why.  The cube complex
    is materialized only while its 0-cell count stays within max_zero_cells;
    link homology is computed per type while the model link's face count
    stays within homology_cap, or always when homology=True.
    """
    p = params.Parameters.for_robots(r, n, N)
    if not allow_trivial:
        p.require_nontrivial()
    orbit, canonical = params.symmetry_orbit(p)
    dimension = min(p.as_tuple())

    if p.nontrivial:
        note = None
        terms = params.ell_terms(p)
        l = min(terms)
        statement = (
            f"{l - 2}-connected at infinity, not {l - 1}-connected at infinity"
        )
        duality = params.is_duality(canonical)
        exceptional = params.is_exceptional(canonical)
        witness = None
        if exceptional:
            m = canonical.r
            witness = params.SolutionType(2, m - 2, m - 2, 2)
        types = tuple(
            _build_type_row(t, p, homology, homology_cap)
            for t in params.solution_types(p)
        )
        if min(row.bound for row in types) != l - 2:
            raise ConsistencyError(
                f"minimum link bound over types differs from ell - 2 for {p}"
            )
    else:
        note = (
            "min(r, R, n, N) < 2: the robot braid group is a free group and "
            "the connectivity-at-infinity formulas do not apply"
        )
        terms = l = statement = duality = exceptional = witness = None
        types = ()

    built = min(r, n, N) >= 1 and comb(n + N, r) <= max_zero_cells
    f_vec = euler = flag_ok = None
    if built:
        C = confspace.build_conf(r, n, N, max_zero_cells=max_zero_cells)
        f_vec = C.f_vector()
        euler = C.euler_characteristic()
        if len(C.zero_cells()) <= flag_cap:
            flag_ok = all(
                confspace.is_flag(confspace.vertex_link(C, v))
                for v in C.zero_cells()
            )

    return Report(
        parameters=p,
        orbit=orbit,
        canonical=canonical,
        dimension=dimension,
        note=note,
        ell=l,
        ell_terms=terms,
        statement=statement,
        duality=duality,
        exceptional=exceptional,
        exceptional_witness=witness,
        types=types,
        built=built,
        f_vector=f_vec,
        euler=euler,
        flag_ok=flag_ok,
    )


def render_json(report: Report) -> str:
    """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"


def parse_json(text: str) -> Report:
    return Report.from_dict(json.loads(text))


def _fmt_hconn(row: TypeRow) -> str:
    if row.hconn is None:
        return "-"
    if row.hconn is CONTRACTIBLE:
        return "contractible"
    parts = [f"hconn {row.hconn}"]
    for deg, b in row.betti or ():
        parts.append(f"H~{deg} rank {b}")
    for deg, fs in row.torsion or ():
        parts.append(f"H~{deg} torsion {'+'.join(f'Z/{f}' for f in fs)}")
    return ", ".join(parts)


def render_text(report: Report) -> str:
    p = report.parameters
    lines = [
        f"{p}  [r={p.r} R={p.R} n={p.n} N={p.N}, T={p.T}]",
        f"orbit ({len(report.orbit)}): "
        + ", ".join(str(q.as_tuple()) for q in report.orbit),
        f"canonical: {report.canonical}  {report.canonical.as_tuple()}",
        f"dimension: {report.dimension}",
    ]
    if report.note:
        lines.append(f"note: {report.note}")
    if report.ell is not None:
        lines.append(f"ell: {report.ell}  (candidates {report.ell_terms})")
        lines.append(f"statement: {report.statement}")
        lines.append(f"duality complex: {'yes' if report.duality else 'no'}")
        if report.exceptional:
            lines.append(
                "exceptional case: yes "
                f"(witness type {report.exceptional_witness.as_tuple()}, "
                "a suspension link)"
            )
        else:
            lines.append("exceptional case: no")
    if report.built:
        lines.append(f"f-vector: {report.f_vector}  euler: {report.euler}")
        if report.flag_ok is not None:
            lines.append(
                f"all vertex links flag (locally CAT(0)): "
                f"{'yes' if report.flag_ok else 'NO'}"
            )
    else:
        lines.append("complex not materialized (0-cell count over cap)")
    if report.types:
        lines.append("type table:")
        header = f"  {'(a,b,c,d)':<14}{'model link':<28}{'nu':<10}{'bound':<7}link homology"
        lines.append(header)
        for row in report.types:
            lines.append(
                f"  {str(row.type.as_tuple()):<14}{row.link:<28}"
                f"{str(row.nus):<10}{row.bound:<7}{_fmt_hconn(row)}"
            )
    return "\n".join(lines) + "\n"
