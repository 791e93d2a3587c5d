"""CLI: thin argparse wrapper that wires to the command runners."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import runners
from .config import (
    DEFAULT_DENSITIES,
    DEFAULT_JOBS,
    DEFAULT_SEED,
    DEFAULT_SELFCHECK_COUNT,
    DEFAULT_SELFCHECK_JOBS,
    DEFAULT_SELFCHECK_MAX_VERTICES,
    EXIT_DIAGNOSTIC,
    EXIT_SIZE_GUARD,
    EXIT_USAGE,
    RunConfig,
)
from .errors import SignedVizingError, SizeGuardError, VizingDiagnosticError
from .logging_utils import setup_logging
from .version import __version__


def parse_vertex_list(text: str) -> list[int]:
    """Comma-separated vertex ids, e.g. ``1,4,5``; empty string means no vertices."""
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated vertex ids, got {text!r}"
        ) from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--log-file", type=str, default=None, help="Optional log file path.")
    common.add_argument("--log-json", action="store_true", help="Emit JSON logs.")
    common.add_argument("--verbose", action="store_true", help="Log engine steps (DEBUG).")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="Seed for randomized suites.")
    common.add_argument("--jobs", type=_positive_int, default=None,
                        help="Worker processes for class-ratio (default 1) and selfcheck "
                             "(default: one per CPU).")
    common.add_argument("--unsigned", action="store_true",
                        help="Sign tokens are optional; every edge reads as negative.")
    common.add_argument("--emit-witness", action="store_true",
                        help="Print the first violation found by verify.")
    common.add_argument("-o", "--output", type=Path, default=None, help="Output file.")

    ap = argparse.ArgumentParser(
        prog="signed-vizing",
        description="Proper edge colorings of signed graphs with at most Delta+1 colors.",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", parents=[common], help="Color with at most Delta+1 colors.")
    p.add_argument("graph", type=Path)
    p.add_argument("--manifest", action="store_true",
                   help="Write <output>.manifest.json with hashes, parameters and timing.")
    p.add_argument("--verify-steps", action="store_true",
                   help="Re-validate the partial coloring after every engine step.")

    for name, text in (
        ("color-exact", "Exact chromatic index with an optimal witness."),
        ("class", "Report class1 (chi' = Delta) or class2."),
        ("linegraph", "Signed line graph through the canonical orientation."),
        ("frustration", "Frustration index and balance."),
        ("three-color", "3-colorable signature of a cubic bridgeless graph."),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("graph", type=Path)

    p = sub.add_parser("class-ratio", parents=[common],
                       help="Fraction of signatures that are Delta-colorable (signs ignored).")
    p.add_argument("graph", type=Path)
    p.add_argument("--mode", choices=["full", "switching"], default="full")

    p = sub.add_parser("switch", parents=[common], help="Switch a graph at a vertex set.")
    p.add_argument("graph", type=Path)
    p.add_argument("--vertices", type=parse_vertex_list, required=True)
    p.add_argument("--coloring", type=Path, default=None, help="Also switch this ColoringFile.")
    p.add_argument("--coloring-output", type=Path, default=None)

    p = sub.add_parser("verify", parents=[common], help="Validate a ColoringFile.")
    p.add_argument("graph", type=Path)
    p.add_argument("coloring", type=Path)

    p = sub.add_parser("extras", parents=[common],
                       help="Reversible, antiproper and total coloring invariants.")
    p.add_argument("graphs", type=Path, nargs="+")
    p.add_argument("--table", type=Path, default=None, help="Write one row per graph.")
    p.add_argument("--table-format", choices=["csv", "parquet"], default="csv")

    p = sub.add_parser("selfcheck", parents=[common], help="Seeded random coloring suite.")
    p.add_argument("--count", type=_positive_int, default=DEFAULT_SELFCHECK_COUNT)
    p.add_argument("--max-vertices", type=_positive_int, default=DEFAULT_SELFCHECK_MAX_VERTICES)
    p.add_argument("--densities", type=float, nargs="+", default=list(DEFAULT_DENSITIES))
    return ap


def _dispatch(cfg: RunConfig, args: argparse.Namespace) -> int:
    cmd = args.command
    if cmd == "color":
        return runners.run_color(cfg, args.graph)
    if cmd == "color-exact":
        return runners.run_color_exact(cfg, args.graph)
    if cmd == "class":
        return runners.run_class(cfg, args.graph)
    if cmd == "class-ratio":
        return runners.run_class_ratio(cfg, args.graph, args.mode)
    if cmd == "linegraph":
        return runners.run_linegraph(cfg, args.graph)
    if cmd == "frustration":
        return runners.run_frustration(cfg, args.graph)
    if cmd == "switch":
        return runners.run_switch(cfg, args.graph, args.vertices, args.coloring,
                                  args.coloring_output)
    if cmd == "verify":
        return runners.run_verify(cfg, args.graph, args.coloring)
    if cmd == "extras":
        return runners.run_extras(cfg, args.graphs, args.table, args.table_format)
    if cmd == "three-color":
        return runners.run_three_color(cfg, args.graph)
    if cmd == "selfcheck":
        return runners.run_selfcheck(cfg, args.count, args.max_vertices, args.densities)
    raise AssertionError(f"unhandled command {cmd}")  # pragma: no cover


def _jobs(args: argparse.Namespace) -> int:
    if args.jobs is not None:
        return int(args.jobs)
    return DEFAULT_SELFCHECK_JOBS if args.command == "selfcheck" else DEFAULT_JOBS


def main(argv: list[str] | None = None) -> int:
    """Run the CLI and return its exit code."""
    ap = build_parser()
    try:
        args = ap.parse_args(args=argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 is reserved for improper colorings
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        return EXIT_USAGE if code == 2 else code

    setup_logging(args.log_file, args.log_json, args.verbose)
    cfg = RunConfig(
        command=args.command,
        seed=args.seed,
        jobs=_jobs(args),
        emit_witness=args.emit_witness,
        unsigned=args.unsigned,
        output=args.output,
        manifest=getattr(args, "manifest", False),
        verify_steps=getattr(args, "verify_steps", False),
    )
    try:
        return _dispatch(cfg, args)
    except SizeGuardError as exc:
        logging.error("Size guard: %s", exc)
        return EXIT_SIZE_GUARD
    except VizingDiagnosticError as exc:
        logging.error("Internal assertion: %s", exc)
        return EXIT_DIAGNOSTIC
    except (SignedVizingError, OSError) as exc:
        logging.error("%s: %s", cfg.command, exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
