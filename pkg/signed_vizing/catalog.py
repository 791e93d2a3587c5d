"""Named signed graphs and small-graph catalogs for tests and reproduction runs."""
from __future__ import annotations

import random
from collections.abc import Iterator

import networkx as nx

from .core import NEGATIVE, POSITIVE, SignedGraph, all_signatures, from_networkx, parse_sign
from .errors import PreconditionError

ATLAS_MAX_VERTICES = 7


def _signed(G: nx.Graph, sign: int | str) -> SignedGraph:
    return from_networkx(G, default_sign=parse_sign(sign))


def complete(n: int, sign: int | str = NEGATIVE) -> SignedGraph:
    return _signed(nx.complete_graph(n), sign)


def cycle(n: int, sign: int | str = NEGATIVE) -> SignedGraph:
    """C_n with edges (1,2), (1,n), (2,3), ... after relabelling."""
    if n < 3:
        raise PreconditionError(f"a circle needs at least 3 vertices, got {n}")
    return _signed(nx.cycle_graph(n), sign)


def path(n: int, sign: int | str = NEGATIVE) -> SignedGraph:
    """Path on n vertices."""
    return _signed(nx.path_graph(n), sign)


def star(k: int, sign: int | str = NEGATIVE) -> SignedGraph:
    """K_{1,k}; vertex 1 is the center."""
    return _signed(nx.star_graph(k), sign)


def complete_bipartite(a: int, b: int, sign: int | str = NEGATIVE) -> SignedGraph:
    return _signed(nx.complete_bipartite_graph(a, b), sign)


def petersen(sign: int | str = NEGATIVE) -> SignedGraph:
    return _signed(nx.petersen_graph(), sign)


def prism(sign: int | str = NEGATIVE) -> SignedGraph:
    """Triangular prism (cubic, 6 vertices)."""
    return _signed(nx.circular_ladder_graph(3), sign)


def cube(sign: int | str = NEGATIVE) -> SignedGraph:
    return _signed(nx.hypercube_graph(3), sign)


NAMED: dict[str, SignedGraph] = {
    "k4": complete(4),
    "k5": complete(5),
    "k33": complete_bipartite(3, 3),
    "c5": cycle(5),
    "petersen": petersen(),
    "prism": prism(),
    "cube": cube(),
}


def small_graphs(
    max_vertices: int, *, min_vertices: int = 1, connected: bool = False
) -> Iterator[SignedGraph]:
    """All-negative representatives of every graph in the networkx atlas up to isomorphism."""
    if max_vertices > ATLAS_MAX_VERTICES:
        raise PreconditionError(
            f"the graph atlas stops at {ATLAS_MAX_VERTICES} vertices, got {max_vertices}"
        )
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if n < min_vertices or n > max_vertices:
            continue
        if connected and not nx.is_connected(G):
            continue
        yield _signed(G, NEGATIVE)


def small_signed_graphs(
    max_vertices: int, *, max_edges: int | None = None, min_edges: int = 0
) -> Iterator[SignedGraph]:
    """Every signature of every atlas graph in range (not reduced by switching)."""
    for g in small_graphs(max_vertices):
        if g.m < min_edges or (max_edges is not None and g.m > max_edges):
            continue
        yield from all_signatures(g)


def random_signed_graph(n: int, density: float, rng: random.Random) -> SignedGraph:
    """G(n, p) underlying graph with independent fair signs, both drawn from ``rng``."""
    if not 0.0 <= density <= 1.0:
        raise PreconditionError(f"density must lie in [0, 1], got {density}")
    G = nx.gnp_random_graph(n, density, seed=rng.randrange(1 << 32))
    for a, b in sorted(G.edges()):
        G.edges[a, b]["sign"] = POSITIVE if rng.random() < 0.5 else NEGATIVE
    return from_networkx(G)
