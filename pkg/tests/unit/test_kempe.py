import pytest
from hypothesis import assume, given, settings

from signed_vizing import catalog
from signed_vizing.coloring import EdgeColoring, absent_colors, validate
from signed_vizing.core import POSITIVE, build_graph
from signed_vizing.errors import ChainError, ZeroChainSwapError
from signed_vizing.kempe import kempe_chain, kempe_swap
from signed_vizing.partial import PartialColoring
from signed_vizing.vizing import color
from tests.strategies import signed_graphs


@pytest.fixture
def p4():
    g = catalog.path(4)
    return EdgeColoring.from_edge_values(g, 4, {1: 1, 2: 2, 3: 1})


@pytest.mark.unit
def test_chain_on_all_negative_path(p4):
    chain = kempe_chain(p4, 1, 2, 1)
    assert chain.vertices == (1, 2, 3, 4)
    assert chain.edge_ids == (1, 2, 3)
    assert chain.is_path()
    assert chain.parities == (0, 0, 0, 0)
    assert chain.end_color == 1

    swapped = kempe_swap(p4, chain)
    assert [swapped.edge_colors(e) for e in (1, 2, 3)] == [(2, 2), (1, 1), (2, 2)]
    assert validate(swapped)
    assert chain.ends_at_with(4, 2)


@pytest.mark.unit
def test_chain_through_positive_edge_flips_colors():
    g = catalog.path(3, POSITIVE)
    gamma = EdgeColoring.from_edge_values(g, 4, {1: 1, 2: 2})
    chain = kempe_chain(gamma, 1, 2, 1)
    assert chain.vertices == (1, 2)
    assert chain.parities == (0, 1)
    swapped = kempe_swap(gamma, chain)
    assert swapped.edge_colors(1) == (2, -2)
    assert validate(swapped)


@pytest.mark.unit
def test_chain_rejects_wrong_colors(p4):
    with pytest.raises(ChainError):
        kempe_chain(p4, 1, 1, 2)
    with pytest.raises(ChainError):
        kempe_chain(p4, 1, -2, 2)


@pytest.mark.unit
def test_zero_chain_is_built_but_not_swapped():
    g = catalog.path(3)
    gamma = EdgeColoring.from_edge_values(g, 3, {1: 0, 2: 1})
    chain = kempe_chain(gamma, 1, 1, 0)
    assert chain.vertices == (1, 2, 3)
    assert chain.has_zero
    with pytest.raises(ZeroChainSwapError):
        kempe_swap(gamma, chain)


@pytest.mark.unit
def test_stale_chain_is_rejected(p4):
    chain = kempe_chain(p4, 1, 2, 1)
    swapped = kempe_swap(p4, chain)
    with pytest.raises(ChainError):
        kempe_swap(swapped, chain)


@pytest.mark.unit
def test_swap_on_partial_coloring_returns_partial(p4):
    state = PartialColoring.from_edge_coloring(p4.graph, p4)
    state.uncolor(3)
    chain = kempe_chain(state, 1, 2, 1)
    assert chain.vertices == (1, 2, 3)
    out = kempe_swap(state, chain)
    assert isinstance(out, PartialColoring)
    assert out.at(1, 1) == 2 and state.at(1, 1) == 1
    assert not out.is_colored(3)


def _assert_chain_clauses(gamma, chain):
    """Alternation, visit count and maximality of a chain built on ``gamma``."""
    a, b = chain.absent, chain.present
    for i, (leaving, arriving) in enumerate(chain.colors):
        here = b if i % 2 == 0 else a
        s = -1 if chain.parities[i] % 2 else 1
        s_next = -1 if chain.parities[i + 1] % 2 else 1
        assert (leaving, arriving) == (s * here, s_next * here)
    for x in set(chain.vertices):
        assert len(chain.trail.visits(x)) <= 2

    s = -1 if chain.parities[-1] % 2 else 1
    last = chain.colors[-1][1]
    want = s * a if last == s * b else s * b
    state = PartialColoring.from_edge_coloring(gamma.graph, gamma)
    nxt = state.edge_with(chain.end, want)
    assert nxt is None or nxt in chain.edge_ids


def _assert_swap(gamma, chain):
    swapped = kempe_swap(gamma, chain)
    assert validate(swapped)
    for x in gamma.graph.vertices:
        if x not in (chain.start, chain.end):
            assert set(swapped.colors_at(x)) == set(gamma.colors_at(x))
    return swapped


def _pick_colors(gamma):
    for v in gamma.graph.vertices:
        here = gamma.colors_at(v)
        for b in sorted(here):
            if b == 0:
                continue
            for a in absent_colors(gamma, v):
                if a != 0 and abs(a) != abs(b):
                    return v, a, b
    return None


@pytest.mark.unit
@settings(max_examples=200, deadline=None)
@given(signed_graphs(min_vertices=2, max_vertices=8, min_edges=2))
def test_swap_keeps_propriety_and_moves_colors_only_at_chain_ends(g):
    gamma = color(g)
    picked = _pick_colors(gamma)
    assume(picked is not None)
    v0, a, b = picked
    chain = kempe_chain(gamma, v0, a, b)
    _assert_chain_clauses(gamma, chain)
    swapped = _assert_swap(gamma, chain)
    if chain.end != chain.start:
        assert set(swapped.colors_at(v0)) == (set(gamma.colors_at(v0)) - {b}) | {a}

    # a vertex met twice is met with opposite parities
    for x in set(chain.vertices):
        visits = chain.trail.visits(x)
        for i, j in zip(visits, visits[1:]):
            assert (chain.parities[j] - chain.parities[i]) % 2 == 1


@pytest.mark.unit
def test_arrivals_alternate_with_the_parity():
    g = build_graph(4, [(1, 2, "+"), (2, 3, "-"), (3, 4, "+")])
    gamma = EdgeColoring.from_edge_values(g, 4, {1: 1, 2: -2, 3: -1})
    chain = kempe_chain(gamma, 1, 2, 1)
    assert chain.vertices == (1, 2, 3, 4)
    assert chain.parities == (0, 1, 1, 2)
    assert chain.colors == ((1, -1), (-2, -2), (-1, 1))
    _assert_chain_clauses(gamma, chain)
    _assert_swap(gamma, chain)


@pytest.mark.slow
def test_ten_thousand_seeded_chains(rng):
    built = 0
    while built < 10_000:
        g = catalog.random_signed_graph(rng.randint(2, 12), rng.choice((0.2, 0.4, 0.7)), rng)
        if not g.m:
            continue
        gamma = color(g)
        for _ in range(20):
            v0 = rng.choice(g.vertices)
            here = [c for c in gamma.colors_at(v0) if c != 0]
            if not here:
                continue
            b = rng.choice(here)
            free = [c for c in absent_colors(gamma, v0) if c != 0 and abs(c) != abs(b)]
            if not free:
                continue
            chain = kempe_chain(gamma, v0, rng.choice(free), b)
            _assert_chain_clauses(gamma, chain)
            _assert_swap(gamma, chain)
            built += 1
