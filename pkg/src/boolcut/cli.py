"""Command-line interface: construct, verify, search, report, identities.

Exit codes: 0 success, 2 parameter or input error, 3 verification failure
(a claimed cutset is not one), 4 search budget exhausted.  All output is
JSON or CSV; every command is deterministic, so artifacts are stable
across runs (there is no randomness anywhere, hence no seed flags).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional

from . import analysis, constructions, formulas, search
from .constructions import Cutset
from .errors import DomainError
from .lattice import TruncatedLattice
from .search import SearchBudget, SearchStatus

_REPORT_HEADER = [
    "n",
    "m",
    "l",
    "c",
    "conjectured_h",
    "g_formula",
    "construction_count",
    "searched_h",
    "searched_g",
    "flags",
]


def _budget_from(args) -> SearchBudget:
    return SearchBudget(
        max_nodes_expanded=args.max_nodes, wall_clock_limit=args.time_limit
    )


def _add_budget_flags(p: argparse.ArgumentParser, nodes: int, seconds: float) -> None:
    p.add_argument(
        "--max-nodes",
        type=int,
        default=nodes,
        help=f"search node budget per call (default {nodes})",
    )
    p.add_argument(
        "--time-limit",
        type=float,
        default=seconds,
        help=f"wall-clock budget per call in seconds (default {seconds})",
    )
    p.add_argument(
        "--max-lattice-nodes",
        type=int,
        default=search.DEFAULT_NODE_CAP,
        help="largest lattice (node count) the search will accept",
    )
    p.add_argument(
        "--symmetry",
        action="store_true",
        help="enable canonical-selection pruning; never changes values",
    )
    p.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker count; values are identical for any setting",
    )


def _check_threads(args) -> None:
    if args.threads < 1:
        raise DomainError("--threads must be >= 1")


def cmd_construct(args) -> int:
    builders = {
        "level": lambda: constructions.cutset_level(args.n, args.m),
        "bicolor": lambda: constructions.cutset_bicolor(args.n, args.m),
        "fourcolor": lambda: constructions.cutset_fourcolor(args.n, args.m),
        "product": lambda: constructions.cutset_product(args.n, args.m, args.l),
        "auto": lambda: constructions.cutset_auto(args.n, args.m, args.l),
    }
    expected_l = {"level": args.m, "bicolor": args.m + 1, "fourcolor": args.m + 2}
    if args.method in expected_l and args.l != expected_l[args.method]:
        raise DomainError(
            f"method {args.method} builds levels m..{expected_l[args.method]}, "
            f"but l={args.l} was requested"
        )
    cut = builders[args.method]()
    method = (
        constructions.choose_method(args.n, args.m, args.l)
        if args.method == "auto"
        else args.method
    )
    summary = {
        "method": method,
        "chain_count": cut.chain_count,
        "levels_used": cut.levels_used(),
    }
    payload = json.dumps(cut.to_json())
    if args.out:
        with open(args.out, "w") as f:
            f.write(payload + "\n")
        print(json.dumps(summary))
    else:
        print(payload)
        print(json.dumps(summary), file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    try:
        with open(args.input) as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read cutset JSON: {exc}", file=sys.stderr)
        return 2
    cut = Cutset.from_json(data)
    nodes = cut.nodes()
    cut_report = analysis.is_cutset(cut.lat, nodes)
    width_report = analysis.width(nodes)
    out = {
        "is_cutset": cut_report.is_cutset,
        "width": width_report.width,
        "antichain_size": len(width_report.antichain_witness),
        "chain_cover_size": len(width_report.chain_cover),
    }
    if not cut_report.is_cutset:
        out["missed_chain"] = cut_report.missed_chain.to_json()
    print(json.dumps(out))
    return 0 if cut_report.is_cutset else 3


def cmd_search(args) -> int:
    _check_threads(args)
    run = search.exact_min_width if args.target == "h" else search.exact_min_per_level
    result = run(
        args.n,
        args.m,
        args.l,
        _budget_from(args),
        node_cap=args.max_lattice_nodes,
        symmetry=args.symmetry,
    )
    print(json.dumps(result.to_json()))
    return 0 if result.status is SearchStatus.EXACT else 4


def _search_cell(result) -> str:
    if result.status is SearchStatus.EXACT:
        return str(result.value)
    if result.status is SearchStatus.BOUNDS:
        return f"{result.lower}..{result.upper}"
    return "UNKNOWN"


def _flag_token(label: str, value: Optional[bool]) -> str:
    if value is None:
        return label.replace("~", "?")
    return label.replace("~", "=" if value else "!=")


def report_rows(n_values, m_values, budget, node_cap, symmetry=False):
    """Yield one report row per instance (n, m, l) with m <= l <= n - m.

    Instances whose lattice exceeds ``node_cap`` keep their formula columns
    but get SKIPPED search cells.
    """
    for n in n_values:
        for m in m_values:
            if m > n - m:
                continue
            for l in range(m, n - m + 1):
                conjectured = formulas.conjectured_min_width(n, m, l)
                g_formula = formulas.per_level_bound_value(n, m, l)
                counts = constructions.method_counts(n, m, l)
                construction = min(counts.values()) if counts else None
                oversize = TruncatedLattice(n, m, l).node_count > node_cap
                if oversize:
                    h_cell, g_cell, flags = "SKIPPED", "SKIPPED", "oversize"
                else:
                    rep = search.conjecture_report(
                        n, m, l, budget, node_cap=node_cap, symmetry=symmetry
                    )
                    h_cell = _search_cell(rep.searched_h)
                    g_cell = _search_cell(rep.searched_g)
                    flags = ";".join(
                        [
                            _flag_token("h~conj", rep.equal_flags["h_matches_conjectured"]),
                            _flag_token("g~h", rep.equal_flags["g_matches_h"]),
                            _flag_token(
                                "constr~conj",
                                rep.equal_flags["construction_matches_conjectured"],
                            ),
                        ]
                    )
                yield [
                    str(n),
                    str(m),
                    str(l),
                    str(l - m + 1),
                    str(conjectured),
                    "" if g_formula is None else str(g_formula),
                    "" if construction is None else str(construction),
                    h_cell,
                    g_cell,
                    flags,
                ]


def cmd_report(args) -> int:
    _check_threads(args)
    if args.n_min > args.n_max or args.m_min > args.m_max or args.m_min < 0:
        raise DomainError("empty or negative parameter range")
    rows = report_rows(
        range(args.n_min, args.n_max + 1),
        range(args.m_min, args.m_max + 1),
        _budget_from(args),
        args.max_lattice_nodes,
        symmetry=args.symmetry,
    )
    _write_csv(args.out, _REPORT_HEADER, rows)
    return 0


def cmd_identities(args) -> int:
    records = formulas.check_identities(args.max_n, args.max_m)
    rows = (
        [r.identity, str(r.n), str(r.m), str(r.lhs), str(r.rhs), str(r.ok).lower()]
        for r in records
    )
    _write_csv(args.out, ["identity", "n", "m", "lhs", "rhs", "pass"], rows)
    return 0


def _write_csv(path: Optional[str], header, rows) -> None:
    def emit(stream):
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)

    if path:
        with open(path, "w", newline="") as f:
            emit(f)
    else:
        emit(sys.stdout)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boolcut",
        description="Cutsets of truncated Boolean lattices: build, verify, search, report.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a cutset and emit it as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument(
        "--method",
        choices=["level", "bicolor", "fourcolor", "product", "auto"],
        default="auto",
    )
    p.add_argument("--out", help="write the cutset JSON here (summary goes to stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a cutset JSON file and measure its width")
    p.add_argument("input", help="path to a cutset JSON file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exact minimum width (h) or per-level bound (g)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--target", choices=["h", "g"], default="h")
    _add_budget_flags(p, nodes=2_000_000, seconds=120.0)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("report", help="conjecture-comparison CSV over a parameter range")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--m-min", type=int, default=0)
    p.add_argument("--m-max", type=int, default=32)
    p.add_argument("--out", help="CSV path (default stdout)")
    _add_budget_flags(p, nodes=50_000, seconds=10.0)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("identities", help="binomial identity check table as CSV")
    p.add_argument("--max-n", type=int, default=40)
    p.add_argument("--max-m", type=int, default=10)
    p.add_argument("--out", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_identities)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
