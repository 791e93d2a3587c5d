import pytest

from signed_vizing import catalog
from signed_vizing.coloring import INVALID_EDGE_LAW, EdgeColoring, magnitude_subgraph, validate
from signed_vizing.core import POSITIVE, build_graph, is_balanced, negate
from signed_vizing.errors import ColoringError, PreconditionError, SizeGuardError
from signed_vizing.extras import (
    ConjectureCheck,
    TotalColoring,
    antiproper_two_coloring,
    biparticity,
    chi_A_exact,
    chi_R_exact,
    chi_star_exact,
    chi_total_exact,
    completely_reversible_coloring,
    delta0_exact,
    delta0_formula,
    find_total_coloring,
    is_antiproper,
    is_completely_reversible,
    is_ordinary_total_coloring,
    is_reversible,
    linear_arboricity_exact,
    linear_arboricity_report,
    magnitude_classes_antibalanced,
    reverse_edge,
    switch_total_coloring,
    total_coloring_report,
    twisted_total_corresponds,
    validate_total,
)
from tests.conftest import signed_cycle


@pytest.fixture
def c4_split():
    g = signed_cycle(4)
    return EdgeColoring.from_edge_values(g, 3, {1: 1, 2: 1, 3: 1, 4: 0})


# -- reversibility ---------------------------------------------------------------


@pytest.mark.unit
def test_reverse_edge_on_a_path_component(c4_split):
    assert all(is_reversible(c4_split, eid) for eid in (1, 2, 3, 4))
    assert is_completely_reversible(c4_split.graph, c4_split)
    out = reverse_edge(c4_split, 2)
    assert out.graph.edge(2).sign == -c4_split.graph.edge(2).sign
    assert validate(out)
    assert [abs(out.edge_colors(e)[0]) for e in (1, 2, 3, 4)] == [1, 1, 1, 0]


@pytest.mark.unit
def test_reverse_zero_edge_keeps_colors(c4_split):
    out = reverse_edge(c4_split, 4)
    assert out.ends == c4_split.ends
    assert validate(out)


@pytest.mark.unit
def test_circle_component_is_not_reversible():
    g = signed_cycle(4)
    gamma = EdgeColoring.from_edge_values(g, 2, dict.fromkeys(g.edge_ids, 1))
    assert not is_reversible(gamma, 1)
    assert not is_completely_reversible(g, gamma)
    with pytest.raises(PreconditionError):
        reverse_edge(gamma, 1)


@pytest.mark.unit
def test_completely_reversible_coloring():
    g = catalog.cycle(4)
    assert completely_reversible_coloring(g, 1) is None
    gamma = completely_reversible_coloring(g, 2)
    assert gamma is not None and gamma.n == 4
    assert validate(gamma)
    assert is_completely_reversible(g, gamma)
    assert all(not magnitude_subgraph(gamma, a).circles for a in (1, 2))


@pytest.mark.unit
def test_chi_R_examples():
    assert chi_R_exact(catalog.path(3)) == 2
    for g in (catalog.cycle(3), catalog.cycle(5, POSITIVE), signed_cycle(6, negatives={1})):
        assert chi_R_exact(g) == 4
    assert chi_R_exact(catalog.complete(1)) == 0
    with pytest.raises(SizeGuardError):
        chi_R_exact(catalog.petersen())


@pytest.mark.unit
def test_linear_arboricity_and_report():
    assert linear_arboricity_exact(catalog.path(3)) == 1
    assert linear_arboricity_exact(catalog.cycle(4)) == 2
    report = linear_arboricity_report(catalog.complete(4))
    assert (report.chi_R, report.la, report.max_degree) == (4, 2, 3)
    assert report.halves_agree
    assert report.window.holds


@pytest.mark.unit
def test_chi_R_is_twice_linear_arboricity_on_small_graphs():
    for g in catalog.small_graphs(4):
        assert chi_R_exact(g) == 2 * linear_arboricity_exact(g)


@pytest.mark.unit
def test_conjecture_check_bounds():
    assert ConjectureCheck("x", 5, 4, 6).holds
    assert not ConjectureCheck("x", 7, 4, 6).holds


# -- antiproper colorings and balanced decomposition -----------------------------


@pytest.mark.unit
def test_is_antiproper_reports_opposite_colors():
    g = catalog.path(3, POSITIVE)
    gamma = EdgeColoring.from_edge_values(g, 2, {1: 1, 2: 1})
    verdict = is_antiproper(g, gamma)
    assert not verdict
    assert (verdict.vertex, verdict.edge_id, verdict.other_edge_id) == (2, 2, 1)
    assert verdict.clause == "antiproper"

    broken = EdgeColoring(g, 2, ((1, 1), (1, -1)), enforce_law=False)
    assert is_antiproper(g, broken).status == INVALID_EDGE_LAW


@pytest.mark.unit
@pytest.mark.parametrize(
    "g", [catalog.cycle(4), catalog.complete(3), catalog.complete_bipartite(2, 3, POSITIVE)]
)
def test_antibalanced_graphs_take_two_colors(g):
    assert is_balanced(g, "antibalance")
    gamma = antiproper_two_coloring(g)
    assert gamma.n == 2
    assert is_antiproper(g, gamma)
    assert magnitude_classes_antibalanced(gamma)
    assert chi_A_exact(g) == 2


@pytest.mark.unit
def test_antiproper_two_coloring_needs_antibalance():
    with pytest.raises(PreconditionError):
        antiproper_two_coloring(catalog.complete(3, POSITIVE))


@pytest.mark.unit
def test_chi_A_examples():
    assert chi_A_exact(catalog.complete(3, POSITIVE)) == 4
    assert chi_A_exact(catalog.cycle(4)) == 2
    assert chi_A_exact(catalog.complete(1)) == 0


@pytest.mark.unit
def test_chi_star_examples():
    assert chi_star_exact(catalog.complete(3, POSITIVE)) == 4
    one_negative = build_graph(3, [(1, 2, "+"), (2, 3, "+"), (1, 3, "-")])
    assert chi_star_exact(one_negative) == 2
    assert chi_star_exact(catalog.complete(1)) == 0


@pytest.mark.unit
def test_delta0_examples():
    assert delta0_exact(catalog.complete(3)) == 2
    assert delta0_exact(signed_cycle(4, negatives={1})) == 2
    assert delta0_exact(signed_cycle(5)) == 1
    assert delta0_exact(catalog.complete(1)) == 0
    with pytest.raises(PreconditionError):
        delta0_formula(catalog.complete(1))


@pytest.mark.unit
def test_balanced_decomposition_formula_on_small_signatures():
    for g in catalog.small_signed_graphs(4, min_edges=1):
        assert delta0_exact(g) == delta0_formula(g)
        assert chi_A_exact(g) == 2 * delta0_exact(negate(g))


@pytest.mark.unit
@pytest.mark.parametrize(
    "g,beta", [(catalog.complete(3), 2), (catalog.complete(5), 3), (catalog.cycle(4), 1)]
)
def test_biparticity(g, beta):
    assert biparticity(g) == beta
    assert biparticity(negate(g)) == beta


# -- total colorings ------------------------------------------------------------


@pytest.mark.unit
def test_negative_edge_total_coloring():
    g = build_graph(2, [(1, 2, "-")])
    mu = TotalColoring.build(g, 3, {1: 1, 2: -1}, {1: 0})
    assert validate_total(g, mu)

    clash = TotalColoring.build(g, 3, {1: 1, 2: -1}, {1: 1})
    verdict = validate_total(g, clash)
    assert not verdict
    assert (verdict.clause, verdict.vertex, verdict.color) == ("incidence", 1, 1)


@pytest.mark.unit
def test_total_and_twisted_vertex_clauses_differ():
    g = build_graph(2, [(1, 2, "+")])
    mu = TotalColoring.build(g, 3, {1: 1, 2: 1}, {1: 0})
    assert validate_total(g, mu, "total")
    verdict = validate_total(g, mu, "twisted")
    assert verdict.clause == "vertex"


@pytest.mark.unit
def test_total_edge_clause_and_graph_check():
    g = catalog.path(3)
    edges = EdgeColoring(g, 3, ((1, 1), (1, 1)))
    mu = TotalColoring(g, 3, (0, -1, 0), edges)
    assert validate_total(g, mu).clause == "edge"
    with pytest.raises(ColoringError):
        validate_total(catalog.path(3, POSITIVE), mu)


@pytest.mark.unit
@pytest.mark.parametrize(
    "g,chi",
    [
        (build_graph(2, [(1, 2, "-")]), 3),
        (build_graph(2, [(1, 2, "+")]), 3),
        (catalog.complete(1), 1),
    ],
)
def test_chi_total_small(g, chi):
    assert chi_total_exact(g) == chi


@pytest.mark.unit
def test_total_coloring_window_on_small_signatures():
    for g in catalog.small_signed_graphs(3):
        for mode in ("total", "twisted"):
            check = total_coloring_report(g, mode)
            assert check.holds, (g, mode, check)


@pytest.mark.unit
def test_total_size_guard():
    with pytest.raises(SizeGuardError):
        chi_total_exact(catalog.complete(6))


@pytest.mark.unit
def test_switching_a_total_coloring():
    g = signed_cycle(4, negatives={1})
    mu = find_total_coloring(g, chi_total_exact(g))
    assert mu is not None
    switched = switch_total_coloring(mu, {1, 2})
    assert validate_total(switched.graph, switched)
    assert switched.vertex_color(1) == -mu.vertex_color(1)


@pytest.mark.unit
def test_twisted_correspondence():
    assert twisted_total_corresponds(signed_cycle(4))
    assert not twisted_total_corresponds(catalog.cycle(3, POSITIVE))
    assert not twisted_total_corresponds(signed_cycle(4, negatives={1}))


@pytest.mark.unit
def test_ordinary_total_coloring():
    g = signed_cycle(4)
    assert is_ordinary_total_coloring(g, {1: 1, 2: 2, 3: 1, 4: 2}, {1: 3, 2: 4, 3: 3, 4: 4})
    assert not is_ordinary_total_coloring(g, {1: 1, 2: 1, 3: 2, 4: 2},
                                          {1: 3, 2: 4, 3: 3, 4: 4})


@pytest.mark.slow
def test_total_coloring_window_up_to_four_vertices():
    for g in catalog.small_signed_graphs(4):
        for mode in ("total", "twisted"):
            check = total_coloring_report(g, mode)
            assert check.holds, (g, mode, check)


@pytest.mark.slow
def test_balanced_decomposition_formula_up_to_eight_edges():
    for g in catalog.small_signed_graphs(5, min_edges=1, max_edges=8):
        d0 = delta0_exact(negate(g))
        assert d0 == delta0_formula(negate(g))
        assert chi_A_exact(g) == 2 * d0
