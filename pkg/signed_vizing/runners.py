"""Command runners: one function per CLI command, each returning an exit code.

Reports go to stdout as ``key value`` lines; progress goes to the log.
"""
from __future__ import annotations

import logging
import random
import time
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import pandas as pd

from .catalog import random_signed_graph
from .coloring import (
    INVALID_EDGE_LAW,
    EdgeColoring,
    Verdict,
    colors_used,
    switch_coloring,
    validate,
)
from .config import (
    DEFAULT_DENSITIES,
    EXIT_EDGE_LAW,
    EXIT_IMPROPER,
    EXIT_OK,
    EngineConfig,
    RunConfig,
)
from .core import SignedGraph, frustration_index, is_balanced, switch
from .errors import SizeGuardError, VizingDiagnosticError
from .exact import RatioMode, class_ratio, exact_coloring, three_colorable_signature
from .extras import (
    biparticity,
    chi_A_exact,
    chi_R_exact,
    chi_star_exact,
    chi_total_exact,
    delta0_exact,
    delta0_formula,
    is_completely_reversible,
    linear_arboricity_exact,
)
from .io_utils import (
    emit_coloring,
    emit_graph,
    manifest_path_for,
    read_coloring,
    read_graph,
    write_frame,
    write_manifest,
    write_text,
)
from .linegraph import line_graph
from .vizing import color


def report(key: str, value: object) -> None:
    """Print one ``key value`` line on stdout."""
    if isinstance(value, bool):
        value = str(value).lower()
    elif value is None:
        value = "NA"
    print(f"{key} {value}", flush=True)


def _report_verdict(verdict: Verdict, emit_witness: bool) -> None:
    report("status", verdict.status)
    if emit_witness and not verdict.ok:
        report("clause", verdict.clause)
        report("vertex", verdict.vertex)
        report("color", verdict.color)
        report("edge", verdict.edge_id)
        report("other_edge", verdict.other_edge_id)


def _exit_for(verdict: Verdict) -> int:
    if verdict.ok:
        return EXIT_OK
    return EXIT_EDGE_LAW if verdict.status == INVALID_EDGE_LAW else EXIT_IMPROPER


def _output(cfg: RunConfig, graph_path: Path, suffix: str) -> Path:
    return cfg.output if cfg.output is not None else graph_path.with_suffix(suffix)


def _load(cfg: RunConfig, graph_path: Path, *, unsigned: bool | None = None) -> SignedGraph:
    g = read_graph(graph_path, unsigned=cfg.unsigned if unsigned is None else unsigned)
    logging.info(f"📥 Loaded {graph_path.name}: n={g.n} m={g.m} max_degree={g.max_degree}")
    return g


def run_color(cfg: RunConfig, graph_path: Path) -> int:
    """Color with at most Delta+1 colors and write the ColoringFile."""
    g = _load(cfg, graph_path)
    t0 = time.time()
    gamma = color(g, config=cfg.engine())
    verdict = validate(gamma)
    if not verdict:
        raise VizingDiagnosticError("constructive coloring failed validation",
                                    {"status": verdict.status, "edge": verdict.edge_id})
    out = write_text(_output(cfg, graph_path, ".col"), emit_coloring(gamma))
    t1 = time.time()
    logging.info(f"💾 Saved {g.m:,} edge colors → {out.name} ({t1 - t0:.3f}s)")
    if cfg.manifest:
        write_manifest(
            manifest_path_for(out),
            command="color",
            input_path=graph_path,
            output_path=out,
            params={"unsigned": cfg.unsigned, "verify_steps": cfg.verify_steps},
            started=t0,
            finished=t1,
        )
    report("max_degree", g.max_degree)
    report("colors", gamma.n)
    report("colors_used", colors_used(gamma))
    report("output", out)
    return EXIT_OK


def run_color_exact(cfg: RunConfig, graph_path: Path) -> int:
    g = _load(cfg, graph_path)
    chi, gamma = exact_coloring(g)
    if cfg.output is not None:
        write_text(cfg.output, emit_coloring(gamma))
        logging.info(f"💾 Saved optimal coloring → {cfg.output.name}")
    report("max_degree", g.max_degree)
    report("chi", chi)
    return EXIT_OK


def run_class(cfg: RunConfig, graph_path: Path) -> int:
    g = _load(cfg, graph_path)
    chi, _ = exact_coloring(g)
    report("max_degree", g.max_degree)
    report("chi", chi)
    report("class", "class1" if chi == g.max_degree else "class2")
    return EXIT_OK


def run_class_ratio(cfg: RunConfig, graph_path: Path, mode: RatioMode = "full") -> int:
    """Signs in the file are ignored: the ratio ranges over all signatures."""
    g = _load(cfg, graph_path, unsigned=True)
    t0 = time.time()
    ratio = class_ratio(g, mode=mode, jobs=cfg.jobs)
    logging.info(f"✅ Class ratio over {1 << g.m:,} signatures in {time.time() - t0:.2f}s")
    report("class_ratio", ratio)
    report("reduced", ratio.value)
    return EXIT_OK


def run_linegraph(cfg: RunConfig, graph_path: Path) -> int:
    g = _load(cfg, graph_path)
    line = line_graph(g)
    if cfg.output is not None:
        write_text(cfg.output, emit_graph(line))
        logging.info(f"💾 Saved line graph → {cfg.output.name}")
    report("vertices", line.n)
    report("edges", line.m)
    report("negative_edges", sum(1 for e in line.edges if not e.positive))
    report("max_degree", line.max_degree)
    return EXIT_OK


def run_frustration(cfg: RunConfig, graph_path: Path) -> int:
    g = _load(cfg, graph_path)
    report("frustration", frustration_index(g))
    report("balanced", is_balanced(g))
    report("antibalanced", is_balanced(g, "antibalance"))
    return EXIT_OK


def run_switch(
    cfg: RunConfig,
    graph_path: Path,
    vertices: Sequence[int],
    coloring_path: Path | None = None,
    coloring_output: Path | None = None,
) -> int:
    """Switch a graph (and optionally a coloring of it) at ``vertices``."""
    g = _load(cfg, graph_path)
    switched = switch(g, vertices)
    out = write_text(_output(cfg, graph_path, ".switched.sg"), emit_graph(switched))
    logging.info(f"🔀 Switched at {sorted(vertices)} → {out.name}")
    report("switched_edges", sum(1 for a, b in zip(g.edges, switched.edges) if a.sign != b.sign))
    report("output", out)
    if coloring_path is not None:
        gamma = read_coloring(coloring_path, g)
        moved = switch_coloring(gamma, vertices)
        col_out = coloring_output or out.with_suffix(".col")
        write_text(col_out, emit_coloring(moved))
        report("coloring_output", col_out)
    return EXIT_OK


def run_verify(cfg: RunConfig, graph_path: Path, coloring_path: Path) -> int:
    g = _load(cfg, graph_path)
    gamma = read_coloring(coloring_path, g)
    verdict = validate(gamma)
    _report_verdict(verdict, cfg.emit_witness)
    if verdict.ok:
        report("colors_used", colors_used(gamma))
    logging.info(f"🔎 {coloring_path.name}: {verdict.status}")
    return _exit_for(verdict)


def _guarded(fn: Callable[[], object], name: str) -> object:
    try:
        return fn()
    except SizeGuardError as exc:
        logging.warning(f"⏭️  {name} skipped: {exc}")
        return None


def extras_row(g: SignedGraph, *, engine: EngineConfig | None = None) -> dict[str, object]:
    """Every variant invariant of one graph; values beyond their size guard are None."""
    row: dict[str, object] = {
        "vertices": g.n,
        "edges": g.m,
        "max_degree": g.max_degree,
        "balanced": is_balanced(g),
        "antibalanced": is_balanced(g, "antibalance"),
    }
    gamma = color(g, config=engine)
    row["vizing_reversible"] = is_completely_reversible(g, gamma)
    row["chi_R"] = _guarded(lambda: chi_R_exact(g), "chi_R")
    row["linear_arboricity"] = _guarded(lambda: linear_arboricity_exact(g), "linear_arboricity")
    row["chi_star"] = _guarded(lambda: chi_star_exact(g), "chi_star")
    row["delta0"] = _guarded(lambda: delta0_exact(g), "delta0")
    row["delta0_formula"] = (
        _guarded(lambda: delta0_formula(g), "delta0_formula") if g.m else None
    )
    row["biparticity"] = _guarded(lambda: biparticity(g), "biparticity")
    row["chi_A"] = _guarded(lambda: chi_A_exact(g), "chi_A")
    row["chi_total"] = _guarded(lambda: chi_total_exact(g, "total"), "chi_total")
    row["chi_twisted"] = _guarded(lambda: chi_total_exact(g, "twisted"), "chi_twisted")
    total = row["chi_total"]
    d = g.max_degree
    row["total_window"] = (
        None if not isinstance(total, int) else d + 1 <= total <= d + 2
    )
    return row


def run_extras(
    cfg: RunConfig,
    graph_paths: Sequence[Path],
    table: Path | None = None,
    table_format: str = "csv",
) -> int:
    rows = []
    for path in graph_paths:
        g = _load(cfg, path)
        row = {"graph": path.stem, **extras_row(g, engine=cfg.engine())}
        for key, value in row.items():
            report(key, value)
        rows.append(row)
    if table is not None:
        written = write_frame(pd.DataFrame(rows), table, table_format)
        logging.info(f"💾 Saved {len(rows)} row(s) → {written.name}")
    return EXIT_OK


def run_three_color(cfg: RunConfig, graph_path: Path) -> int:
    """Write a 3-colorable signature of a cubic bridgeless graph and its witness coloring."""
    g = _load(cfg, graph_path)
    witness = three_colorable_signature(g)
    col_out = _output(cfg, graph_path, ".three.col")
    graph_out = col_out.with_suffix(".sg")
    write_text(graph_out, emit_graph(witness.graph))
    write_text(col_out, emit_coloring(witness.coloring))
    logging.info(f"💾 Saved signature → {graph_out.name}, coloring → {col_out.name}")
    report("matching", ",".join(str(eid) for eid in witness.matching))
    report("colors", witness.coloring.n)
    report("status", validate(witness.coloring).status)
    report("graph_output", graph_out)
    report("output", col_out)
    return EXIT_OK


def _selfcheck_batch(payload: tuple[int, int, int, int, tuple[float, ...], bool]) -> list[str]:
    seed, start, stop, max_vertices, densities, verify_steps = payload
    engine = EngineConfig(verify_steps=verify_steps)
    failures = []
    for i in range(start, stop):
        rng = random.Random(seed * 1_000_003 + i)
        n = rng.randint(1, max_vertices)
        density = densities[i % len(densities)]
        g = random_signed_graph(n, density, rng)
        gamma: EdgeColoring = color(g, config=engine)
        verdict = validate(gamma)
        if not verdict or (g.m and gamma.n > g.max_degree + 1):
            failures.append(f"graph {i}: n={n} density={density} status={verdict.status} "
                            f"colors={gamma.n} max_degree={g.max_degree}")
    return failures


def run_selfcheck(
    cfg: RunConfig,
    count: int,
    max_vertices: int,
    densities: Sequence[float] = DEFAULT_DENSITIES,
) -> int:
    """Color ``count`` seeded random graphs and validate each result."""
    t0 = time.time()
    jobs = max(1, cfg.jobs)
    size = max(1, -(-count // jobs))
    payloads = [
        (cfg.seed, a, min(count, a + size), max_vertices, tuple(densities), cfg.verify_steps)
        for a in range(0, count, size)
    ]
    if jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_selfcheck_batch, payloads))
    else:
        batches = [_selfcheck_batch(p) for p in payloads]
    failures = [f for batch in batches for f in batch]
    for line in failures:
        logging.error(f"❌ {line}")
    logging.info(f"✅ Selfcheck of {count:,} graphs on {jobs} worker(s) finished in "
                 f"{time.time() - t0:.2f}s")
    report("graphs", count)
    report("seed", cfg.seed)
    report("jobs", jobs)
    report("failures", len(failures))
    return EXIT_OK if not failures else EXIT_IMPROPER
