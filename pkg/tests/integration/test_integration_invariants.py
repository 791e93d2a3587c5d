import pytest

pytestmark = pytest.mark.integration


@pytest.mark.parametrize(
    "name,expected", [("k4.sg", "64/64"), ("c5.sg", "16/32"), ("k33.sg", "512/512")]
)
def test_class_ratio(name, expected, capsys, graphs_dir):
    from tests.conftest import run_cli

    code, rep = run_cli(["class-ratio", graphs_dir / name], capsys)
    assert code == 0
    assert rep["class_ratio"] == expected

    code, rep = run_cli(["class-ratio", graphs_dir / name, "--mode", "switching"], capsys)
    assert code == 0
    assert rep["class_ratio"] == expected


def test_class_ratio_in_worker_processes(capsys, graphs_dir):
    from tests.conftest import run_cli

    code, rep = run_cli(["class-ratio", graphs_dir / "k4.sg", "--jobs", "2"], capsys)
    assert code == 0
    assert rep["class_ratio"] == "64/64"
    assert rep["reduced"] == "1"


def test_class_and_exact_on_petersen(tmp_path, capsys, graphs_dir):
    from tests.conftest import run_cli

    graph = graphs_dir / "petersen_allneg.sg"
    code, rep = run_cli(["class", graph], capsys)
    assert code == 0
    assert (rep["chi"], rep["class"]) == ("4", "class2")

    out = tmp_path / "opt.col"
    code, rep = run_cli(["color-exact", graph, "-o", out], capsys)
    assert code == 0 and rep["chi"] == "4"
    assert run_cli(["verify", graph, out], capsys)[0] == 0


def test_class_of_a_balanced_even_circle(tmp_path, capsys):
    from tests.conftest import run_cli, signed_cycle, write_graph

    graph = write_graph(tmp_path, "c6.sg", signed_cycle(6))
    code, rep = run_cli(["class", graph], capsys)
    assert code == 0
    assert (rep["chi"], rep["class"]) == ("2", "class1")


def test_size_guard_exit_four(tmp_path, capsys):
    from signed_vizing import catalog
    from tests.conftest import run_cli, write_graph

    graph = write_graph(tmp_path, "k7.sg", catalog.complete(7))
    assert run_cli(["color-exact", graph], capsys)[0] == 4
    assert run_cli(["class-ratio", graph], capsys)[0] == 4


@pytest.mark.parametrize(
    "name,frustration,balanced,antibalanced",
    [("k3_pos.sg", "0", "true", "false"), ("c5.sg", "1", "false", "true")],
)
def test_frustration(name, frustration, balanced, antibalanced, capsys, graphs_dir):
    from tests.conftest import run_cli

    code, rep = run_cli(["frustration", graphs_dir / name], capsys)
    assert code == 0
    assert (rep["frustration"], rep["balanced"], rep["antibalanced"]) == (
        frustration, balanced, antibalanced
    )


def test_linegraph(tmp_path, capsys, graphs_dir):
    from signed_vizing.io_utils import read_graph
    from tests.conftest import run_cli

    out = tmp_path / "line.sg"
    code, rep = run_cli(["linegraph", graphs_dir / "c5.sg", "-o", out], capsys)
    assert code == 0
    assert (rep["vertices"], rep["edges"], rep["max_degree"]) == ("5", "5", "2")
    line = read_graph(out)
    assert line.m == 5
    assert sum(1 for e in line.edges if not e.positive) == int(rep["negative_edges"])


def test_extras_report_and_table(tmp_path, capsys, graphs_dir):
    import pandas as pd

    from signed_vizing import catalog
    from tests.conftest import run_cli, write_graph

    edgeless = write_graph(tmp_path, "k1.sg", catalog.complete(1))
    table = tmp_path / "extras.csv"
    code, rep = run_cli(
        ["extras", graphs_dir / "k3_pos.sg", edgeless, "--table", table], capsys
    )
    assert code == 0
    # the last graph's lines come last
    assert rep["graph"] == "k1"
    assert rep["delta0_formula"] == "NA"
    assert rep["chi_total"] == "1"
    assert rep["total_window"] == "true"

    df = pd.read_csv(table)
    assert df["graph"].tolist() == ["k3_pos", "k1"]
    first = df.iloc[0]
    assert (first["chi_A"], first["chi_star"], first["chi_R"]) == (4, 4, 4)
    assert bool(first["balanced"]) and not bool(first["antibalanced"])


def test_extras_beyond_guard_prints_na(tmp_path, capsys):
    from signed_vizing import catalog
    from tests.conftest import run_cli, write_graph

    graph = write_graph(tmp_path, "k6.sg", catalog.complete(6))
    code, rep = run_cli(["extras", graph], capsys)
    assert code == 0
    assert rep["chi_R"] == "NA"
    assert rep["chi_total"] == "NA"
    assert rep["vizing_reversible"] in ("true", "false")


@pytest.mark.parametrize("jobs", ["1", "2"])
def test_selfcheck(jobs, capsys):
    from tests.conftest import run_cli

    code, rep = run_cli(
        ["selfcheck", "--count", "24", "--max-vertices", "9", "--seed", "3", "--jobs", jobs],
        capsys,
    )
    assert code == 0
    assert (rep["graphs"], rep["seed"], rep["jobs"], rep["failures"]) == ("24", "3", jobs, "0")


def test_selfcheck_defaults_to_one_worker_per_cpu(capsys):
    from signed_vizing.config import DEFAULT_SELFCHECK_JOBS
    from tests.conftest import run_cli

    code, rep = run_cli(["selfcheck", "--count", "4", "--max-vertices", "6"], capsys)
    assert code == 0
    assert rep["jobs"] == str(DEFAULT_SELFCHECK_JOBS)


@pytest.mark.slow
def test_default_selfcheck_finishes_within_thirty_seconds(capsys):
    import time

    from tests.conftest import run_cli

    t0 = time.perf_counter()
    code, rep = run_cli(["selfcheck"], capsys)
    elapsed = time.perf_counter() - t0
    assert code == 0
    assert (rep["graphs"], rep["failures"]) == ("1000", "0")
    assert elapsed < 30.0, f"selfcheck took {elapsed:.1f}s"
