import random
from pathlib import Path

import pytest

from signed_vizing.cli import main
from signed_vizing.core import build_graph
from signed_vizing.io_utils import emit_graph

# --- Helpers used by unit and integration tests ---


def run_cli(argv, capsys):
    """
    Invoke signed_vizing.cli.main() with argv and parse its report.

    Args:
        argv: list[str] as if from the CLI (without program name).
        capsys: pytest's capsys fixture.

    Returns:
        (exit code, {key: value} read from the ``key value`` stdout lines)

    """
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    report = {}
    for line in out.splitlines():
        key, _, value = line.partition(" ")
        report[key] = value
    return code, report


def signed_cycle(n, negatives=()):
    """C_n on 1..n with edge i joining i and i+1 (edge n closes the circle)."""
    edges = [(i, i % n + 1, "-" if i in negatives else "+") for i in range(1, n + 1)]
    return build_graph(n, edges)


def write_graph(tmp_path: Path, name: str, g) -> Path:
    path = tmp_path / name
    path.write_text(emit_graph(g), encoding="utf-8")
    return path


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def negative_triangle():
    return build_graph(3, [(1, 2, "-"), (2, 3, "-"), (1, 3, "-")])


@pytest.fixture
def positive_triangle():
    return build_graph(3, [(1, 2, "+"), (2, 3, "+"), (1, 3, "+")])
