"""Command-line front end.

Subcommands:

  analyze <file>          full invariant analysis of a graph file
  family <kind> <params>  build a named family instance and analyze it
  check                   run the claim checker over enumerated graphs
  rainbow <file>          rainbow paths for one pair or all pairs

Exit codes: 0 success; 1 when --expect-admits was set but the graph
admits no componentwise J-colouring; 2 on input errors (malformed files
are reported with line numbers).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .analysis import ALL_MODES, CONNECTIVITY_MODES, analyse_graph, dump_json, render_text
from .colouring import Colouring, ConventionInfeasibleError, chromatic_number, convention_colouring
from .connectivity import rainbow_path_exists
from .families import KINDS, FamilySpec, enumerate_graphs, generate, oracle_j, oracle_j_star
from .graphs import Graph, decompose
from .io import FormatError, export_dot, read_graph
from .jcolouring import jc_number
from .neighbourhoods import MODES as RAINBOW_MODES
from .theorems import THEOREM_IDS, check_all, report


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jrainbow",
        description="Exact analysis of J-colourings, rainbow neighbourhoods "
        "and rainbow connectivity for small graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="analyse a graph file")
    analyze.add_argument("file", help="graph file (edge list, or DIMACS .col)")
    analyze.add_argument(
        "--format", choices=("auto", "edgelist", "dimacs"), default="auto",
        help="input format; DIMACS vertex ids are 1-based and shifted to "
        "0-based internally (default: auto, by .col suffix)",
    )
    _add_output_flags(analyze)

    family = sub.add_parser("family", help="analyse a named family instance")
    family.add_argument("kind", choices=[k for k in KINDS if k != "disjoint_union"])
    family.add_argument(
        "params", type=int, nargs="+",
        help="orders / part sizes (wheel takes its total order: hub + rim)",
    )
    _add_output_flags(family)

    chk = sub.add_parser("check", help="run the claim checker over all "
                         "non-isomorphic graphs up to a size")
    chk.add_argument("--max-n", type=int, required=True, help="largest vertex count (<= 8)")
    chk.add_argument(
        "--theorems", default="all",
        help="comma-separated claim ids (T1..T10) or 'all'",
    )
    chk.add_argument("--connected-only", action="store_true")
    chk.add_argument("--workers", type=int, default=1)
    chk.add_argument("--text", action="store_true", help="print the text table instead of JSON")
    chk.add_argument("--json", metavar="PATH", help="write the JSON report to PATH ('-' = stdout)")

    rainbow = sub.add_parser("rainbow", help="rainbow paths under a J-colouring "
                             "(falling back to a chromatic colouring)")
    rainbow.add_argument("file")
    rainbow.add_argument(
        "--format", choices=("auto", "edgelist", "dimacs"), default="auto")
    group = rainbow.add_mutually_exclusive_group(required=True)
    group.add_argument("--pair", nargs=2, type=int, metavar=("U", "V"))
    group.add_argument("--all-pairs", action="store_true")
    rainbow.add_argument("--json", metavar="PATH", help="write JSON to PATH ('-' = stdout)")
    rainbow.add_argument("--dot", metavar="PATH", help="write a DOT rendering with bold witness paths")
    return parser


def _add_output_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--json", metavar="PATH", help="write the JSON document to PATH ('-' = stdout)")
    sub.add_argument("--dot", metavar="PATH", help="write a DOT rendering to PATH")
    sub.add_argument(
        "--modes", default="all",
        help="comma-separated analysis modes out of "
        f"{', '.join(ALL_MODES)} (default: all)",
    )
    sub.add_argument(
        "--expect-admits", action="store_true",
        help="exit 1 when the graph admits no componentwise J-colouring",
    )
    sub.add_argument("--seed", type=int, default=None,
                     help="reserved for future randomised corpora (unused)")


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _parse_modes(spec: str) -> tuple[list[str], list[str]]:
    if spec == "all":
        return list(RAINBOW_MODES), list(CONNECTIVITY_MODES)
    tokens = [t.strip() for t in spec.split(",") if t.strip()]
    rainbow = [t for t in tokens if t in RAINBOW_MODES]
    connectivity = [t for t in tokens if t in CONNECTIVITY_MODES]
    unknown = [t for t in tokens if t not in RAINBOW_MODES + CONNECTIVITY_MODES]
    if unknown:
        raise ValueError(f"unknown modes: {', '.join(unknown)}")
    return rainbow, connectivity


def _dot_colouring(g: Graph):
    """Colouring used for DOT output: the componentwise J-witness when the
    graph admits one, else per-component convention chromatic colourings
    merged on the parent ids (falling back to uncoloured on infeasibility)."""
    result = jc_number(g)
    if result.admits:
        dec = result.decomposition
        assign = [0] * g.n
        for ci, res in enumerate(result.per_component):
            assert res.witness is not None
            for li, pv in enumerate(dec.vertices[ci]):
                assign[pv] = res.witness.assignment[li]
        return Colouring(ell=max(assign), assignment=tuple(assign))
    try:
        dec = decompose(g)
        assign = [0] * g.n
        ell = 0
        for ci, comp in enumerate(dec.components):
            chi, _ = chromatic_number(comp)
            col = convention_colouring(comp, chi)
            for li, pv in enumerate(dec.vertices[ci]):
                assign[pv] = col.assignment[li]
            ell = max(ell, chi)
        return Colouring(ell=ell, assignment=tuple(assign))
    except ConventionInfeasibleError:
        return None


def _run_analysis(g: Graph, args: argparse.Namespace, extra: dict | None = None) -> int:
    rainbow_modes, connectivity_modes = _parse_modes(args.modes)
    doc = analyse_graph(g, rainbow_modes=rainbow_modes, connectivity_modes=connectivity_modes)
    if extra:
        doc.update(extra)
    if args.json is not None:
        _emit(dump_json(doc), args.json)
    else:
        sys.stdout.write(render_text(doc))
    if args.dot is not None:
        _emit(export_dot(g, _dot_colouring(g)), args.dot)
    if args.expect_admits and not doc["whole"]["jc"]["admits"]:
        return 1
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    g = read_graph(args.file, args.format)
    return _run_analysis(g, args)


def _cmd_family(args: argparse.Namespace) -> int:
    spec = FamilySpec(args.kind, tuple(args.params))
    g = generate(spec)
    oracle = {
        "family": {
            "kind": spec.kind,
            "params": list(spec.params),
            "oracle_j": oracle_j(spec).to_json_dict(),
            "oracle_j_star": oracle_j_star(spec).to_json_dict(),
        }
    }
    return _run_analysis(g, args, extra=oracle)


def _cmd_check(args: argparse.Namespace) -> int:
    if not 1 <= args.max_n <= 8:
        raise ValueError(f"--max-n must be in 1..8, got {args.max_n}")
    if args.theorems == "all":
        theorems = list(THEOREM_IDS)
    else:
        theorems = [t.strip() for t in args.theorems.split(",") if t.strip()]
    graphs = []
    for n in range(1, args.max_n + 1):
        graphs.extend(enumerate_graphs(n, connected_only=args.connected_only))
    corpus = (
        f"{'connected ' if args.connected_only else ''}graphs n<={args.max_n}"
    )
    verdicts = check_all(graphs, corpus=corpus, theorems=theorems, workers=args.workers)
    if args.text:
        sys.stdout.write(report(verdicts, "text"))
        if args.json:
            _emit(report(verdicts, "json"), args.json)
    else:
        _emit(report(verdicts, "json"), args.json if args.json else "-")
    return 0


def _cmd_rainbow(args: argparse.Namespace) -> int:
    g = read_graph(args.file, args.format)
    dec = decompose(g)
    result = jc_number(g)
    if result.admits:
        source = "j-colouring"
        comp_colourings = [res.witness for res in result.per_component]
    else:
        source = "chromatic-convention"
        comp_colourings = []
        for comp in dec.components:
            chi, chi_witness = chromatic_number(comp)
            try:
                comp_colourings.append(convention_colouring(comp, chi))
            except ConventionInfeasibleError:
                comp_colourings.append(chi_witness)
    if args.pair:
        u, v = args.pair
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise ValueError(f"pair ({u}, {v}) outside 0..{g.n - 1}")
        pairs = [(min(u, v), max(u, v))] if u != v else []
        if u == v:
            raise ValueError("rainbow paths need two distinct vertices")
    else:
        pairs = [
            (u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
        ]
    entries = []
    witness_paths = []
    for u, v in pairs:
        cu, lu = dec.vertex_map[u]
        cv, lv = dec.vertex_map[v]
        if cu != cv:
            entries.append(
                {"pair": [u, v], "exists": False, "path": None,
                 "reason": "different components"}
            )
            continue
        comp = dec.components[cu]
        col = comp_colourings[cu]
        witness = rainbow_path_exists(comp, col, lu, lv)
        if witness is None:
            entries.append({"pair": [u, v], "exists": False, "path": None, "reason": None})
        else:
            parent_path = [dec.vertices[cu][w] for w in witness.path]
            witness_paths.append(parent_path)
            entries.append(
                {"pair": [u, v], "exists": True, "path": parent_path,
                 "colours": sorted(witness.colours_seen)}
            )
    doc = {
        "schema": "rainbow-paths/1",
        "graph": {"n": g.n, "m": g.m},
        "colouring_source": source,
        "colourings": [c.to_json_dict() if c else None for c in comp_colourings],
        "pairs": entries,
    }
    if args.json is not None:
        _emit(dump_json(doc), args.json)
    else:
        for e in entries:
            if e["exists"]:
                sys.stdout.write(f"{e['pair'][0]} {e['pair'][1]}: {' '.join(map(str, e['path']))}\n")
            else:
                reason = f" ({e['reason']})" if e.get("reason") else ""
                sys.stdout.write(f"{e['pair'][0]} {e['pair'][1]}: no rainbow path{reason}\n")
    if args.dot is not None:
        _emit(export_dot(g, _dot_colouring(g), witness_paths), args.dot)
    return 0


_COMMANDS = {
    "analyze": _cmd_analyze,
    "family": _cmd_family,
    "check": _cmd_check,
    "rainbow": _cmd_rainbow,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except FormatError as exc:
        print(f"error: {args.file}: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
