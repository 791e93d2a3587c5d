from fractions import Fraction

import pytest

from signed_vizing import catalog
from signed_vizing.coloring import colors_used, switch_coloring, validate
from signed_vizing.core import NEGATIVE, POSITIVE, all_negative, build_graph, switch
from signed_vizing.errors import (
    NotCubicBridgelessError,
    PreconditionError,
    SignedVizingError,
    SizeGuardError,
)
from signed_vizing.exact import (
    ClassRatio,
    class_of,
    class_ratio,
    exact_chromatic_index,
    exact_coloring,
    find_coloring,
    is_colorable,
    is_hamiltonian,
    ordinary_chromatic_index,
    perfect_matching,
    signatures_by_class,
    three_colorable_signature,
)
from signed_vizing.extras import is_completely_reversible
from signed_vizing.vizing import color
from tests.conftest import signed_cycle


@pytest.mark.unit
@pytest.mark.parametrize(
    "g,chi",
    [
        (signed_cycle(5), 2),
        (catalog.cycle(5), 3),
        (signed_cycle(6), 2),
        (signed_cycle(6, negatives={1}), 3),
        (catalog.complete(3), 3),
        (catalog.petersen(), 4),
        (catalog.complete(4), 3),
    ],
)
def test_exact_chromatic_index(g, chi):
    found, witness = exact_coloring(g)
    assert found == chi
    assert witness.n == chi
    assert validate(witness)


@pytest.mark.unit
def test_class_examples():
    assert class_of(signed_cycle(4)) == "class1"
    assert class_of(signed_cycle(4, negatives={1})) == "class2"
    assert class_of(catalog.complete(5)) == "class2"


@pytest.mark.unit
def test_edgeless_and_small_n():
    chi, witness = exact_coloring(catalog.complete(1))
    assert chi == 0 and witness.ends == ()
    assert find_coloring(catalog.complete(4), 2) is None
    assert is_colorable(catalog.complete(4), 3)


@pytest.mark.unit
def test_exact_size_guard():
    with pytest.raises(SizeGuardError):
        exact_chromatic_index(catalog.complete(7))


@pytest.mark.unit
def test_all_negative_matches_ordinary_chromatic_index():
    for g in catalog.small_graphs(5):
        assert exact_chromatic_index(all_negative(g)) == ordinary_chromatic_index(g)


@pytest.mark.unit
def test_vizing_window_on_every_small_signature():
    for g in catalog.small_signed_graphs(4):
        assert exact_chromatic_index(g) in (g.max_degree, g.max_degree + 1) or g.m == 0


@pytest.mark.unit
@pytest.mark.parametrize(
    "g,expected",
    [
        (catalog.complete(4), "64/64"),
        (catalog.cycle(5), "16/32"),
        (catalog.complete_bipartite(3, 3), "512/512"),
        (catalog.complete(1), "1/1"),
        (catalog.complete(2), "2/2"),
        (catalog.complete(3), "4/8"),
    ],
)
def test_class_ratio_values(g, expected):
    assert str(class_ratio(g)) == expected


@pytest.mark.unit
@pytest.mark.parametrize("n", range(3, 8))
def test_class_ratio_of_circles_is_one_half(n):
    ratio = class_ratio(catalog.cycle(n))
    assert str(ratio) == f"{2 ** (n - 1)}/{2 ** n}"
    assert ratio.value == Fraction(1, 2)


@pytest.mark.unit
@pytest.mark.parametrize("g", [catalog.complete(4), catalog.cycle(5), catalog.prism()])
def test_class_ratio_switching_mode_agrees(g):
    assert class_ratio(g, mode="switching") == class_ratio(g)


@pytest.mark.unit
def test_class_ratio_in_worker_processes():
    assert class_ratio(catalog.cycle(5), jobs=2) == class_ratio(catalog.cycle(5))


@pytest.mark.unit
def test_class_ratio_guard():
    with pytest.raises(SizeGuardError):
        class_ratio(catalog.petersen())


@pytest.mark.unit
def test_class_ratio_rejects_bad_fractions_and_modes():
    with pytest.raises(PreconditionError):
        ClassRatio(3, 2)
    with pytest.raises(SignedVizingError):
        ClassRatio(-1, 4)
    with pytest.raises(PreconditionError):
        class_ratio(catalog.cycle(3), mode="sampled")  # type: ignore[arg-type]
    assert ClassRatio(2, 4).value == Fraction(1, 2)


@pytest.mark.unit
def test_class_ratio_switching_mode_on_a_forest_with_circles():
    g = build_graph(7, [(1, 2, "-"), (2, 3, "-"), (1, 3, "-"), (4, 5, "+"), (6, 7, "-")])
    assert class_ratio(g, mode="switching") == class_ratio(g)
    assert str(class_ratio(g, mode="switching")) == "16/32"


@pytest.mark.slow
def test_class_ratio_of_k5_is_below_one_half():
    assert class_ratio(catalog.complete(5), mode="switching").value < Fraction(1, 2)


@pytest.mark.unit
def test_signatures_by_class_of_triangle():
    classes = signatures_by_class(catalog.complete(3))
    for mask, cls in classes.items():
        assert cls == ("class1" if bin(mask).count("1") % 2 == 0 else "class2")


@pytest.mark.unit
def test_perfect_matching_and_hamiltonicity():
    m = perfect_matching(catalog.petersen())
    assert m is not None and len(m) == 5
    g = catalog.petersen()
    assert {v for eid in m for v in (g.edge(eid).u, g.edge(eid).v)} == set(g.vertices)
    assert perfect_matching(catalog.cycle(5)) is None
    assert not is_hamiltonian(catalog.petersen())
    assert is_hamiltonian(catalog.complete(4))
    assert not is_hamiltonian(catalog.path(4))


@pytest.mark.unit
@pytest.mark.parametrize("g", [catalog.petersen(), catalog.cube(), catalog.prism()])
def test_three_colorable_signature(g):
    witness = three_colorable_signature(g)
    assert witness.coloring.n == 3
    assert validate(witness.coloring)
    assert witness.graph.same_underlying(g)
    for e in witness.graph.edges:
        assert e.sign == (NEGATIVE if e.id in witness.matching else POSITIVE)
    assert exact_chromatic_index(witness.graph) == 3


def _cubic_with_bridge():
    half = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]
    edges = [(u, v, "-") for u, v in half] + [(u + 5, v + 5, "-") for u, v in half]
    return build_graph(10, edges + [(5, 10, "-")])


@pytest.mark.unit
@pytest.mark.parametrize("g", [catalog.complete(5), catalog.cycle(4), _cubic_with_bridge()])
def test_three_color_rejects_non_cubic_bridgeless(g):
    with pytest.raises(NotCubicBridgelessError):
        three_colorable_signature(g)


@pytest.mark.unit
@pytest.mark.parametrize("g", [catalog.prism(), catalog.complete(4)])
def test_hamiltonian_cubic_graphs_have_ratio_at_least_one_half(g):
    assert is_hamiltonian(g)
    assert class_ratio(g).value >= Fraction(1, 2)


@pytest.mark.unit
def test_switching_keeps_counts_class_and_reversibility(rng):
    for _ in range(500):
        g = catalog.random_signed_graph(rng.randint(2, 6), rng.choice((0.3, 0.6, 0.9)), rng)
        x = {v for v in g.vertices if rng.random() < 0.5}
        h = switch(g, x)
        gamma = color(g)
        moved = switch_coloring(gamma, x)
        assert moved.graph == h and validate(moved)
        assert colors_used(moved) == colors_used(gamma)
        assert is_completely_reversible(h, moved) == is_completely_reversible(g, gamma)
        assert exact_chromatic_index(h) == exact_chromatic_index(g)
        assert class_of(h) == class_of(g)


@pytest.mark.slow
def test_vizing_window_on_every_signature_up_to_five_vertices():
    for g in catalog.small_signed_graphs(5, min_edges=1):
        assert exact_chromatic_index(g) in (g.max_degree, g.max_degree + 1)


@pytest.mark.slow
def test_all_negative_matches_ordinary_chromatic_index_up_to_six_vertices():
    for g in catalog.small_graphs(6):
        assert exact_chromatic_index(all_negative(g)) == ordinary_chromatic_index(g)
