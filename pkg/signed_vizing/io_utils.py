"""IO helpers: GraphFile/ColoringFile codecs, manifests, tabular reports."""
from __future__ import annotations

import hashlib
import json
import logging
from collections.abc import Iterator, Mapping
from datetime import datetime
from pathlib import Path

import pandas as pd

from .coloring import ColorSet, EdgeColoring
from .core import NEGATIVE, Edge, SignedGraph, parse_sign, sign_token
from .errors import ColorSetError, GraphValidationError, ParseError
from .version import __version__

MANIFEST_SUFFIX = ".manifest.json"


def _text(data: str | bytes) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    return data


def _records(data: str | bytes) -> Iterator[tuple[int, list[str]]]:
    """(line number, tokens) for every non-blank, non-comment line."""
    for lineno, raw in enumerate(_text(data).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _int(token: str, what: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", lineno) from None


def parse_graph(data: str | bytes, *, unsigned: bool = False) -> SignedGraph:
    """Read a GraphFile (``p sg n m`` then m ``e u v sign`` lines).

    With ``unsigned`` the sign token may be omitted and any sign present is ignored;
    every edge then reads as negative (the ordinary-graph reading).
    """
    n = m = -1
    header_line = 0
    edges: list[Edge] = []
    pairs: dict[frozenset[int], int] = {}
    for lineno, tok in _records(data):
        if tok[0] == "p":
            if header_line:
                raise ParseError("second header line", lineno)
            if len(tok) != 4 or tok[1] != "sg":
                raise ParseError("header must read 'p sg <n> <m>'", lineno)
            n, m = _int(tok[2], "vertex count", lineno), _int(tok[3], "edge count", lineno)
            if n < 0 or m < 0:
                raise ParseError("vertex and edge counts must be non-negative", lineno)
            header_line = lineno
            continue
        if tok[0] != "e":
            raise ParseError(f"unknown record type {tok[0]!r}", lineno)
        if not header_line:
            raise ParseError("edge line before the 'p sg' header", lineno)
        if len(tok) not in ((3, 4) if unsigned else (4,)):
            raise ParseError("edge line must read 'e <u> <v> <+|->'", lineno)
        u, v = _int(tok[1], "vertex", lineno), _int(tok[2], "vertex", lineno)
        if unsigned:
            sign = NEGATIVE
        else:
            try:
                sign = parse_sign(tok[3])
            except GraphValidationError:
                raise ParseError(f"sign must be '+' or '-', got {tok[3]!r}", lineno) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"endpoint out of range 1..{n}: ({u}, {v})", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        pair = frozenset((u, v))
        if pair in pairs:
            raise ParseError(f"edge {u} {v} repeats the edge on line {pairs[pair]}", lineno)
        pairs[pair] = lineno
        if len(edges) == m:
            raise ParseError(f"more than the {m} edges announced in the header", lineno)
        edges.append(Edge(len(edges) + 1, u, v, sign))
    if not header_line:
        raise ParseError("missing 'p sg <n> <m>' header")
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    return SignedGraph(tuple(range(1, n + 1)), tuple(edges))


def emit_graph(g: SignedGraph) -> str:
    """GraphFile text; vertices are renumbered 1..n in their listed order."""
    label = {v: i for i, v in enumerate(g.vertices, start=1)}
    lines = [f"p sg {g.n} {g.m}"]
    lines += [f"e {label[e.u]} {label[e.v]} {sign_token(e.sign)}" for e in g.edges]
    return "\n".join(lines) + "\n"


def read_graph(path: Path, *, unsigned: bool = False) -> SignedGraph:
    return parse_graph(path.read_bytes(), unsigned=unsigned)


def parse_coloring(data: str | bytes, graph: SignedGraph) -> EdgeColoring:
    """Read a ColoringFile against ``graph``.

    The edge law is not enforced here so that :func:`~signed_vizing.coloring.validate`
    can report it.
    """
    n = -1
    colors: dict[int, tuple[int, int]] = {}
    seen_at: dict[int, int] = {}
    cs: ColorSet | None = None
    for lineno, tok in _records(data):
        if tok[0] == "s":
            if cs is not None:
                raise ParseError("second header line", lineno)
            if len(tok) != 3 or tok[1] != "chi":
                raise ParseError("header must read 's chi <n>'", lineno)
            n = _int(tok[2], "color count", lineno)
            try:
                cs = ColorSet(n)
            except ColorSetError as exc:
                raise ParseError(str(exc), lineno) from None
            continue
        if tok[0] != "c":
            raise ParseError(f"unknown record type {tok[0]!r}", lineno)
        if cs is None:
            raise ParseError("color line before the 's chi' header", lineno)
        if len(tok) != 4:
            raise ParseError(
                "color line must read 'c <edge-index> <color-at-u> <color-at-v>'", lineno
            )
        idx = _int(tok[1], "edge index", lineno)
        cu, cv = _int(tok[2], "color", lineno), _int(tok[3], "color", lineno)
        if not 1 <= idx <= graph.m:
            raise ParseError(f"edge index {idx} out of range 1..{graph.m}", lineno)
        if idx in seen_at:
            raise ParseError(f"edge index {idx} already colored on line {seen_at[idx]}", lineno)
        for c in (cu, cv):
            if c not in cs:
                raise ParseError(f"color {c} is not in M_{n}", lineno)
        seen_at[idx] = lineno
        colors[idx] = (cu, cv)
    if cs is None:
        raise ParseError("missing 's chi <n>' header")
    missing = [i for i in range(1, graph.m + 1) if i not in colors]
    if missing:
        raise ParseError(f"edges without colors: {missing[:10]}")
    return EdgeColoring(graph, n, tuple(colors[i] for i in range(1, graph.m + 1)),
                        enforce_law=False)


def emit_coloring(gamma: EdgeColoring) -> str:
    """ColoringFile text; edge indices follow ``gamma.graph.edges`` order."""
    lines = [f"s chi {gamma.n}"]
    lines += [f"c {i} {cu} {cv}" for i, (cu, cv) in enumerate(gamma.ends, start=1)]
    return "\n".join(lines) + "\n"


def read_coloring(path: Path, graph: SignedGraph) -> EdgeColoring:
    return parse_coloring(path.read_bytes(), graph)


def write_text(path: Path, text: str) -> Path:
    """Write ``text`` with LF line endings, creating parent directories."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(text.encode("utf-8"))
    return path


def _parquet_engine() -> str | None:
    """Detect available parquet engine (pyarrow or fastparquet)."""
    try:
        import pyarrow  # noqa: F401

        return "pyarrow"
    except Exception:
        try:
            import fastparquet  # noqa: F401

            return "fastparquet"
        except Exception:
            return None


def write_frame(df: pd.DataFrame, path: Path, out_format: str) -> Path:
    """Write dataframe to disk; parquet falls back to CSV when no engine is installed."""
    path.parent.mkdir(parents=True, exist_ok=True)
    if out_format == "parquet":
        eng = _parquet_engine()
        if eng:
            df.to_parquet(path, index=False, engine=eng)  # type: ignore[call-overload]
            return path
        csv_path = path.with_suffix(".csv")
        logging.warning(
            "Parquet engine not found (install pyarrow or fastparquet). Falling back to CSV: %s",
            csv_path,
        )
        df.to_csv(csv_path, index=False)
        return csv_path
    df.to_csv(path, index=False)
    return path


def sha256_of_file(path: Path) -> str:
    """Compute SHA256 of file."""
    h = hashlib.sha256()
    with path.open("rb") as f:
        for chunk in iter(lambda: f.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def manifest_path_for(output: Path) -> Path:
    return output.with_name(output.name + MANIFEST_SUFFIX)


def write_manifest(
    manifest_path: Path,
    *,
    command: str,
    input_path: Path,
    output_path: Path,
    params: Mapping[str, object],
    started: float,
    finished: float,
) -> None:
    """Write JSON manifest describing one command run."""
    manifest = {
        "command": command,
        "input_file": str(input_path),
        "input_sha256": sha256_of_file(input_path) if input_path.exists() else None,
        "output_file": str(output_path),
        "output_sha256": sha256_of_file(output_path) if output_path.exists() else None,
        "params": dict(params),
        "started_at": datetime.fromtimestamp(started).isoformat(),
        "finished_at": datetime.fromtimestamp(finished).isoformat(),
        "duration_seconds": round(finished - started, 3),
        "version": __version__,
    }
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True), encoding="utf-8")
