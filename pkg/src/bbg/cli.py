"""Command-line interface.

Two subcommands:

  bbg report r n N [--json PATH] [--export-cells PATH] [--export-facets PATH]
                   [--homology] [--max-zero-cells K] [--allow-trivial]
  bbg verify [--level quick|full] [--seed INT] [--mutate nu]
             [--criteria K ...]

Exit codes: 0 on success, 1 when a verification or consistency check fails,
2 on usage or resource errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import confspace, report, simplicial, verify
from .errors import ConsistencyError, MembershipError, NotASimplexError, ParameterError, ResourceLimitError


def _cmd_report(args) -> int:
    rep = report.build_report(
        args.r,
        args.n,
        args.N,
        allow_trivial=args.allow_trivial,
        homology=args.homology,
        max_zero_cells=args.max_zero_cells,
    )
    if args.json:
        Path(args.json).write_text(report.render_json(rep))
    if args.export_cells:
        C = confspace.build_conf(
            args.r, args.n, args.N, max_zero_cells=args.max_zero_cells
        )
        Path(args.export_cells).write_text("\n".join(C.cell_lines()) + "\n")
    if args.export_facets:
        lines = []
        for row in rep.types:
            L = simplicial.model_link(row.type, args.n, args.N)
            lines.append(f"# type {row.type.as_tuple()}: {row.link}")
            lines.extend(L.facet_lines("board squares rXcY, join factors tagged A:/B:"))
            lines.append("")
        Path(args.export_facets).write_text("\n".join(lines))
    sys.stdout.write(report.render_text(rep))
    return 0


def _cmd_verify(args) -> int:
    vr = verify.run(
        level=args.level, seed=args.seed, mutate=args.mutate, criteria=args.criteria
    )
    print("\n".join(vr.lines()))
    return 0 if vr.ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bbg",
        description=(
            "Discrete configuration spaces of robots on complete bipartite "
            "graphs: connectivity reports and exact verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rp = sub.add_parser(
        "report", help="connectivity-at-infinity report for r robots on K_{n,N}"
    )
    rp.add_argument("r", type=int, help="number of robots")
    rp.add_argument("n", type=int, help="left side of the bipartite graph")
    rp.add_argument("N", type=int, help="right side of the bipartite graph")
    rp.add_argument("--json", metavar="PATH", help="also write the report as JSON")
    rp.add_argument(
        "--export-cells", metavar="PATH", help="write the cube-cell list (builds the complex)"
    )
    rp.add_argument(
        "--export-facets", metavar="PATH", help="write the model-link facet lists"
    )
    rp.add_argument(
        "--homology",
        action="store_true",
        help="force link homology even over the face-count cap",
    )
    rp.add_argument(
        "--max-zero-cells",
        type=int,
        default=report.DEFAULT_BUILD_CAP,
        metavar="K",
        help=f"0-cell cap for materializing the complex (default {report.DEFAULT_BUILD_CAP})",
    )
    rp.add_argument(
        "--allow-trivial",
        action="store_true",
        help="accept min(r, R, n, N) < 2 and skip the connectivity formulas",
    )
    rp.set_defaults(fn=_cmd_report)

    vp = sub.add_parser("verify", help="run the numbered verification criteria")
    vp.add_argument("--level", choices=verify.LEVELS, default="quick")
    vp.add_argument(
        "--seed", type=int, default=verify.DEFAULT_SEED, help="seed for the randomized checks"
    )
    vp.add_argument(
        "--mutate",
        choices=["nu"],
        help="self-test: corrupt a formula and confirm the harness catches it",
    )
    vp.add_argument(
        "--criteria",
        type=int,
        nargs="+",
        metavar="K",
        help="criterion numbers to run (default: all twelve)",
    )
    vp.set_defaults(fn=_cmd_verify)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ResourceLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ParameterError, MembershipError, NotASimplexError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ConsistencyError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
