#!/usr/bin/env python3
"""Re-run the reference numbers through the CLI and print ``key value`` lines.

Each number comes from one ``signed-vizing`` command on a GraphFile under
``data/graphs`` (the command is echoed in the log), plus the catalog sweeps that
have no single input file.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import logging
import sys
import tempfile
from pathlib import Path

from signed_vizing import catalog
from signed_vizing.cli import main as cli_main
from signed_vizing.core import negate
from signed_vizing.exact import class_ratio, exact_chromatic_index
from signed_vizing.extras import chi_A_exact, chi_star_exact, chi_total_exact, delta0_exact
from signed_vizing.io_utils import emit_graph
from signed_vizing.logging_utils import setup_logging

GRAPHS = Path(__file__).resolve().parent / "graphs"


def run(argv: list[str]) -> dict[str, str]:
    """Run one CLI command and parse its ``key value`` report."""
    logging.info("▶️  signed-vizing %s", " ".join(argv))
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(argv)
    out = dict(line.split(" ", 1) for line in buf.getvalue().splitlines() if " " in line)
    out["exit"] = str(code)
    return out


def build_argument_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--graphs", type=Path, default=GRAPHS, help="GraphFile directory.")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--selfcheck-count", type=int, default=1000)
    parser.add_argument("--skip-slow", action="store_true",
                        help="Skip K_5 class ratio and the catalog sweeps.")
    parser.add_argument("--log-file", type=str, default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_argument_parser().parse_args(argv)
    setup_logging(args.log_file)
    g = args.graphs
    jobs = ["--jobs", str(args.jobs)]

    with tempfile.TemporaryDirectory() as tmp:
        col = Path(tmp) / "petersen.col"
        res = run(["color", str(g / "petersen_allneg.sg"), "-o", str(col)])
        print(f"petersen_color_colors {res['colors']}")
        verify = run(["verify", str(g / "petersen_allneg.sg"), str(col)])
        print(f"petersen_color_verify_exit {verify['exit']}")
        print(f"petersen_chi {run(['color-exact', str(g / 'petersen_allneg.sg')])['chi']}")
        three_out = Path(tmp) / "p3.col"
        three = run(["three-color", str(g / "petersen_allneg.sg"), "-o", str(three_out)])
        print(f"petersen_three_color_status {three['status']}")

        selfcheck = run(["selfcheck", "--count", str(args.selfcheck_count),
                         "--seed", str(args.seed), *jobs])
        print(f"selfcheck_failures {selfcheck['failures']}")

        print(f"class_ratio_k33 {run(['class-ratio', str(g / 'k33.sg'), *jobs])['class_ratio']}")
        print(f"class_ratio_k4 {run(['class-ratio', str(g / 'k4.sg'), *jobs])['class_ratio']}")
        print(f"class_ratio_c5 {run(['class-ratio', str(g / 'c5.sg'), *jobs])['class_ratio']}")
        for n in range(3, 9):
            path = Path(tmp) / f"c{n}.sg"
            path.write_text(emit_graph(catalog.cycle(n)), encoding="utf-8")
            print(f"class_ratio_c{n} {run(['class-ratio', str(path)])['class_ratio']}")
        if not args.skip_slow:
            print(f"class_ratio_k5 {run(['class-ratio', str(g / 'k5.sg'), *jobs])['class_ratio']}")

    if args.skip_slow:
        return 0

    vizing_window = all(
        exact_chromatic_index(s) in (s.max_degree, s.max_degree + 1)
        for s in catalog.small_signed_graphs(5)
    )
    print(f"exact_in_vizing_window_n5 {str(vizing_window).lower()}")

    formula = all(
        chi_A_exact(s) == 2 * delta0_exact(negate(s)) == 2 * (chi_star_exact(s) - 1).bit_length()
        for s in catalog.small_signed_graphs(5, min_edges=1, max_edges=8)
    )
    print(f"antiproper_formula_holds {str(formula).lower()}")

    window = all(
        s.max_degree + 1 <= chi_total_exact(s) <= s.max_degree + 2
        for s in catalog.small_signed_graphs(4)
    )
    print(f"total_coloring_window_n4 {str(window).lower()}")
    print(f"class_ratio_k5_switching {class_ratio(catalog.complete(5), mode='switching')}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
