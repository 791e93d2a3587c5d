import json

import pytest

pytestmark = pytest.mark.integration


def test_color_then_verify_with_manifest(tmp_path, capsys, graphs_dir):
    """color writes a Delta+1 coloring that verify accepts."""
    from tests.conftest import run_cli

    graph = graphs_dir / "petersen_allneg.sg"
    out = tmp_path / "petersen.col"
    code, rep = run_cli(["color", graph, "-o", out, "--manifest", "--verify-steps"], capsys)
    assert code == 0
    assert rep["max_degree"] == "3"
    assert rep["colors"] == "4"
    assert out.read_text().startswith("s chi 4\n")

    manifest = json.loads((tmp_path / "petersen.col.manifest.json").read_text())
    assert manifest["command"] == "color"
    assert manifest["params"]["verify_steps"] is True

    code, rep = run_cli(["verify", graph, out], capsys)
    assert code == 0
    assert rep["status"] == "proper"


def test_color_default_output_next_to_graph(tmp_path, capsys):
    from signed_vizing import catalog
    from tests.conftest import run_cli, write_graph

    graph = write_graph(tmp_path, "prism.sg", catalog.prism("+"))
    code, rep = run_cli(["color", graph], capsys)
    assert code == 0
    assert (tmp_path / "prism.col").exists()
    assert rep["output"] == str(tmp_path / "prism.col")


def test_verify_reports_repeated_color(tmp_path, capsys, triangle_file):
    """Color 1 twice at vertex 1 is improper (exit 2)."""
    from tests.conftest import run_cli

    col = tmp_path / "bad.col"
    col.write_text("s chi 3\nc 1 1 1\nc 2 1 1\nc 3 -1 -1\n")
    code, rep = run_cli(["verify", triangle_file, col, "--emit-witness"], capsys)
    assert code == 2
    assert rep["status"] == "improper"
    assert (rep["vertex"], rep["color"], rep["edge"], rep["other_edge"]) == ("1", "1", "2", "1")


def test_verify_reports_edge_law(tmp_path, capsys, triangle_file):
    """A negative edge needs equal colors at both ends (exit 3)."""
    from tests.conftest import run_cli

    col = tmp_path / "law.col"
    col.write_text("s chi 3\nc 1 1 -1\nc 2 0 0\nc 3 -1 -1\n")
    code, rep = run_cli(["verify", triangle_file, col, "--emit-witness"], capsys)
    assert code == 3
    assert rep["status"] == "invalid_edge_law"
    assert (rep["vertex"], rep["edge"], rep["other_edge"]) == ("1", "1", "NA")

    code, rep = run_cli(["verify", triangle_file, col], capsys)
    assert code == 3
    assert "edge" not in rep


def test_switch_graph_and_coloring(tmp_path, capsys, graphs_dir):
    from tests.conftest import run_cli

    graph = graphs_dir / "k3_pos.sg"
    col = tmp_path / "k3.col"
    assert run_cli(["color", graph, "-o", col], capsys)[0] == 0

    out = tmp_path / "k3_sw.sg"
    code, rep = run_cli(
        ["switch", graph, "--vertices", "1", "-o", out, "--coloring", col], capsys
    )
    assert code == 0
    assert rep["switched_edges"] == "2"
    assert rep["coloring_output"] == str(tmp_path / "k3_sw.col")

    code, rep = run_cli(["verify", out, tmp_path / "k3_sw.col"], capsys)
    assert code == 0 and rep["status"] == "proper"


def test_three_color_petersen(tmp_path, capsys, graphs_dir):
    from tests.conftest import run_cli

    out = tmp_path / "p3.col"
    code, rep = run_cli(["three-color", graphs_dir / "petersen_allneg.sg", "-o", out], capsys)
    assert code == 0
    assert rep["colors"] == "3"
    assert rep["status"] == "proper"
    assert len(rep["matching"].split(",")) == 5

    code, rep = run_cli(["verify", tmp_path / "p3.sg", out], capsys)
    assert code == 0


def test_three_color_rejects_a_circle(tmp_path, capsys):
    from signed_vizing import catalog
    from tests.conftest import run_cli, write_graph

    graph = write_graph(tmp_path, "c4.sg", catalog.cycle(4))
    assert run_cli(["three-color", graph], capsys)[0] == 1


def test_unsigned_reading(tmp_path, capsys):
    from tests.conftest import run_cli

    graph = tmp_path / "p3.sg"
    graph.write_text("p sg 3 2\ne 1 2\ne 2 3\n")
    assert run_cli(["color", graph, "--unsigned", "-o", tmp_path / "p3.col"], capsys)[0] == 0
    assert run_cli(["color", graph], capsys)[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["color"],
        ["bogus", "x.sg"],
        ["selfcheck", "--count", "0"],
        ["switch", "g.sg", "--vertices", "1,a"],
    ],
)
def test_usage_errors_exit_one(argv, capsys):
    from tests.conftest import run_cli

    assert run_cli(argv, capsys)[0] == 1


def test_parse_error_and_missing_file_exit_one(tmp_path, capsys):
    from tests.conftest import run_cli

    broken = tmp_path / "broken.sg"
    broken.write_text("p sg 2 1\ne 1 1 +\n")
    assert run_cli(["color", broken], capsys)[0] == 1
    assert run_cli(["color", tmp_path / "missing.sg"], capsys)[0] == 1
