"""Discrete configuration spaces of robots on complete bipartite graphs.

Exact integer tooling for the cube complex Conf_r(n, N) of r robots on the
complete bipartite graph K_{n,N}: construction and cell enumeration, vertex
links and their chessboard-join models, reduced integer homology via Smith
normal form, connectivity-at-infinity reports, and a numbered verification
harness.  Everything is exact; nothing here is numeric approximation.
"""

from .confspace import (
    BipartiteGraph,
    CubeCell,
    CubeComplex,
    Edge,
    Vertex,
    build_conf,
    classify_zero_cell,
    is_flag,
    vertex_link,
)
from .covers import (
    brute_force_labelled_count,
    labelled_cell_count,
    verify_cover_index,
)
from .errors import (
    BbgError,
    ConsistencyError,
    MembershipError,
    NotASimplexError,
    ParameterError,
    ParameterOrderError,
    ResourceLimitError,
    SearchBudgetError,
    TrivialParametersError,
)
from .homology import (
    CONTRACTIBLE,
    ChainComplex,
    HomologyResult,
    chain_complex,
    homological_connectivity,
    homology_of,
    reduced_homology,
)
from .params import (
    Parameters,
    SolutionType,
    add_floors,
    claims_minima,
    ell,
    ell_terms,
    is_duality,
    is_exceptional,
    link_lower_bound,
    nu,
    solution_types,
    symmetry_orbit,
)
from .report import Report, TypeRow, build_report, parse_json, render_json, render_text
from .simplicial import (
    SimplicialComplex,
    are_isomorphic,
    chessboard,
    delete_closed_simplex,
    is_vertex_decomposable,
    join,
    model_link,
)
from .snf import SnfResult, backend_name, smith_normal_form
from .verify import CriterionResult, VerificationRun, run

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "CubeCell",
    "CubeComplex",
    "Edge",
    "Vertex",
    "build_conf",
    "classify_zero_cell",
    "is_flag",
    "vertex_link",
    "brute_force_labelled_count",
    "labelled_cell_count",
    "verify_cover_index",
    "BbgError",
    "ConsistencyError",
    "MembershipError",
    "NotASimplexError",
    "ParameterError",
    "ParameterOrderError",
    "ResourceLimitError",
    "SearchBudgetError",
    "TrivialParametersError",
    "CONTRACTIBLE",
    "ChainComplex",
    "HomologyResult",
    "chain_complex",
    "homological_connectivity",
    "homology_of",
    "reduced_homology",
    "Parameters",
    "SolutionType",
    "add_floors",
    "claims_minima",
    "ell",
    "ell_terms",
    "is_duality",
    "is_exceptional",
    "link_lower_bound",
    "nu",
    "solution_types",
    "symmetry_orbit",
    "Report",
    "TypeRow",
    "build_report",
    "parse_json",
    "render_json",
    "render_text",
    "SimplicialComplex",
    "are_isomorphic",
    "chessboard",
    "delete_closed_simplex",
    "is_vertex_decomposable",
    "join",
    "model_link",
    "SnfResult",
    "backend_name",
    "smith_normal_form",
    "CriterionResult",
    "VerificationRun",
    "run",
    "__version__",
]
