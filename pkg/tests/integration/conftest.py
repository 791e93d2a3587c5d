from pathlib import Path

import pytest

from signed_vizing import catalog
from tests.conftest import write_graph

GRAPHS = Path(__file__).resolve().parents[2] / "data" / "graphs"


@pytest.fixture
def graphs_dir():
    return GRAPHS


@pytest.fixture
def triangle_file(tmp_path):
    """All-negative triangle; edges 1=(1,2), 2=(1,3), 3=(2,3)."""
    return write_graph(tmp_path, "k3.sg", catalog.complete(3))
