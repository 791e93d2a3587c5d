"""Coloring variants: reversible, antiproper and total colorings, with small exact solvers.

The two open conjectures touched here (linear arboricity and total coloring) are
only ever checked and reported through :class:`ConjectureCheck`, never assumed.
"""
from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Literal

import networkx as nx

from .coloring import (
    IMPROPER,
    INVALID_EDGE_LAW,
    PROPER_VERDICT,
    ColorSet,
    EdgeColoring,
    Verdict,
    magnitude_subgraph,
    switch_coloring,
    validate,
)
from .config import (
    CHI_A_MAX_EDGES,
    CHI_R_MAX_EDGES,
    CHI_STAR_MAX_VERTICES,
    DELTA0_MAX_EDGES,
    LINEAR_ARBORICITY_MAX_EDGES,
    TOTAL_MAX_VERTICES,
)
from .core import (
    NEGATIVE,
    Edge,
    SignedGraph,
    all_negative,
    is_balanced,
    negate,
    switch,
    switching_equivalent,
    with_signs,
)
from .errors import ColoringError, PreconditionError, SizeGuardError
from .exact import dfs_edge_order, symmetry_candidates

logger = logging.getLogger(__name__)

TotalMode = Literal["total", "twisted"]


def _guard(name: str, limit: int, actual: int) -> None:
    if actual > limit:
        raise SizeGuardError(name, limit, actual)


def _ceil_log2(x: int) -> int:
    return (x - 1).bit_length()


@dataclass(frozen=True)
class ConjectureCheck:
    """An empirical bound check: ``lower <= value <= upper``."""

    name: str
    value: int
    lower: int
    upper: int

    @property
    def holds(self) -> bool:
        return self.lower <= self.value <= self.upper


class _ParityForest:
    """Union-find with parity labels and single-step rollback."""

    def __init__(self) -> None:
        self.parent: dict[int, int] = {}
        self.parity: dict[int, int] = {}
        self.size: dict[int, int] = {}
        self.history: list[int | None] = []

    def find(self, x: int) -> tuple[int, int]:
        p = 0
        while self.parent.get(x, x) != x:
            p ^= self.parity[x]
            x = self.parent[x]
        return x, p

    def union(self, x: int, y: int, odd: int) -> bool:
        """Join x and y with relative parity ``odd``; False (and no change) on a conflict."""
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx == ry:
            if px ^ py != odd:
                return False
            self.history.append(None)
            return True
        if self.size.get(rx, 1) < self.size.get(ry, 1):
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.parity[ry] = px ^ py ^ odd
        self.size[rx] = self.size.get(rx, 1) + self.size.get(ry, 1)
        self.history.append(ry)
        return True

    def connected(self, x: int, y: int) -> bool:
        return self.find(x)[0] == self.find(y)[0]

    def rollback(self) -> None:
        ry = self.history.pop()
        if ry is None:
            return
        rx = self.parent[ry]
        self.size[rx] -= self.size.get(ry, 1)
        del self.parent[ry]
        del self.parity[ry]


def _path_ends(
    path_vertices: tuple[int, ...], edges: Iterable[Edge], a: int
) -> dict[int, tuple[int, int]]:
    """Color a path with +-a from its first vertex; end colors follow the edge law."""
    out: dict[int, tuple[int, int]] = {}
    c = a
    for x, e in zip(path_vertices, edges):
        at_x = c
        at_y = -e.sign * at_x
        out[e.id] = (at_x, at_y) if x == e.u else (at_y, at_x)
        c = -at_y
    return out


def _linear_components(
    g: SignedGraph, edge_ids: Iterable[int]
) -> list[tuple[tuple[int, ...], tuple[Edge, ...]]]:
    """Paths of a linear forest as (vertices, edges) in walk order."""
    adj: dict[int, list[Edge]] = {}
    chosen = [g.edge(eid) for eid in sorted(edge_ids)]
    for e in chosen:
        adj.setdefault(e.u, []).append(e)
        adj.setdefault(e.v, []).append(e)
    seen: set[int] = set()
    out = []
    for start in sorted(v for v, es in adj.items() if len(es) == 1):
        if adj[start][0].id in seen:
            continue
        verts, path = [start], []
        cur = start
        while True:
            nxt = next((e for e in adj[cur] if e.id not in seen), None)
            if nxt is None:
                break
            seen.add(nxt.id)
            path.append(nxt)
            cur = nxt.other(cur)
            verts.append(cur)
        out.append((tuple(verts), tuple(path)))
    if len(seen) != len(chosen):
        raise PreconditionError("edge set is not a linear forest")
    return out


# -- reversibility --------------------------------------------------------------


def is_reversible(gamma: EdgeColoring, eid: int) -> bool:
    """Whether edge ``eid`` lies in a path component of its magnitude subgraph."""
    cu, _ = gamma.edge_colors(eid)
    comp = magnitude_subgraph(gamma, abs(cu)).component_of(eid)
    return comp.kind != "circle"


def reverse_edge(gamma: EdgeColoring, eid: int) -> EdgeColoring:
    """Coloring of the graph with sigma(eid) negated and the same magnitude on every edge."""
    if not validate(gamma):
        raise PreconditionError("reversal needs a proper coloring")
    if not is_reversible(gamma, eid):
        raise PreconditionError(f"edge {eid} lies on a circle of its magnitude subgraph")
    g = gamma.graph
    target = with_signs(g, [-e.sign if e.id == eid else e.sign for e in g.edges])
    cu, _ = gamma.edge_colors(eid)
    a = abs(cu)
    ends = {e.id: pair for e, pair in zip(g.edges, gamma.ends)}
    if a != 0:
        comp = magnitude_subgraph(gamma, a).component_of(eid)
        path = tuple(target.edge(x) for x in comp.edge_ids)
        ends.update(_path_ends(comp.vertices, path, a))
    return EdgeColoring(target, gamma.n, tuple(ends[e.id] for e in target.edges))


def is_completely_reversible(g: SignedGraph, gamma: EdgeColoring) -> bool:
    if gamma.graph != g:
        raise ColoringError("coloring references a different graph")
    return all(not magnitude_subgraph(gamma, a).circles
               for a in gamma.color_set.magnitudes if a != 0)


def completely_reversible_coloring(g: SignedGraph, k: int) -> EdgeColoring | None:
    """Zero-free coloring from M_{2k} whose magnitude classes are linear forests, or None."""
    if g.m == 0:
        return EdgeColoring(g, max(2 * k, 1), ())
    order = [g.edge(eid) for eid in dfs_edge_order(g)]
    forests = [_ParityForest() for _ in range(k)]
    degree = [dict.fromkeys(g.vertices, 0) for _ in range(k)]
    label: dict[int, int] = {}

    def place(i: int, top: int) -> bool:
        if i == len(order):
            return True
        e = order[i]
        for m in range(min(top + 1, k)):
            dm = degree[m]
            if dm[e.u] == 2 or dm[e.v] == 2 or forests[m].connected(e.u, e.v):
                continue
            forests[m].union(e.u, e.v, 0)
            dm[e.u] += 1
            dm[e.v] += 1
            label[e.id] = m
            if place(i + 1, max(top, m + 1)):
                return True
            forests[m].rollback()
            dm[e.u] -= 1
            dm[e.v] -= 1
        return False

    if not place(0, 0):
        return None
    ends: dict[int, tuple[int, int]] = {}
    for m in range(k):
        for verts, path in _linear_components(g, [eid for eid, x in label.items() if x == m]):
            ends.update(_path_ends(verts, path, m + 1))
    return EdgeColoring(g, 2 * k, tuple(ends[e.id] for e in g.edges))


def chi_R_exact(g: SignedGraph, *, max_edges: int = CHI_R_MAX_EDGES) -> int:
    """Fewest colors in a completely reversible zero-free proper coloring."""
    _guard("chi_R edges", max_edges, g.m)
    if g.m == 0:
        return 0
    k = (g.max_degree + 1) // 2
    while completely_reversible_coloring(g, k) is None:
        k += 1
    return 2 * k


def linear_arboricity_exact(g: SignedGraph, *, max_edges: int = LINEAR_ARBORICITY_MAX_EDGES) -> int:
    """Fewest linear forests covering the edges, by brute force over edge labellings."""
    _guard("linear_arboricity edges", max_edges, g.m)
    if g.m == 0:
        return 0
    edges = [(e.u, e.v) for e in g.edges]
    k = (g.max_degree + 1) // 2
    while True:
        for rest in itertools.product(range(k), repeat=g.m - 1):
            labels = (0, *rest)
            if all(_is_linear_forest([edges[i] for i, x in enumerate(labels) if x == m])
                   for m in range(k)):
                return k
        k += 1


def _is_linear_forest(pairs: list[tuple[int, int]]) -> bool:
    if not pairs:
        return True
    G = nx.Graph(pairs)
    return nx.is_forest(G) and max(d for _, d in G.degree()) <= 2


@dataclass(frozen=True)
class LinearArboricityReport:
    chi_R: int
    la: int
    max_degree: int

    @property
    def halves_agree(self) -> bool:
        return -(-self.chi_R // 2) == self.la

    @property
    def window(self) -> ConjectureCheck:
        d = self.max_degree
        return ConjectureCheck("linear_arboricity", self.chi_R, d, d + 2)


def linear_arboricity_report(g: SignedGraph) -> LinearArboricityReport:
    report = LinearArboricityReport(chi_R_exact(g), linear_arboricity_exact(g), g.max_degree)
    if not report.halves_agree:
        logger.warning("chi_R %d and linear arboricity %d disagree", report.chi_R, report.la)
    return report


# -- antiproper colorings -------------------------------------------------------


def is_antiproper(g: SignedGraph, gamma: EdgeColoring) -> Verdict:
    """gamma(v,e) != -gamma(v,f) for distinct edges at every vertex."""
    if gamma.graph != g:
        raise ColoringError("coloring references a different graph")
    law = validate(gamma)
    if law.status == INVALID_EDGE_LAW:
        return law
    for v in sorted(g.vertices):
        seen: dict[int, int] = {}
        for e in sorted(g.incident(v), key=lambda f: f.id):
            c = gamma.at(v, e.id)
            if -c in seen:
                return Verdict(IMPROPER, vertex=v, color=c, edge_id=e.id,
                               other_edge_id=seen[-c], clause="antiproper")
            seen.setdefault(c, e.id)
    return PROPER_VERDICT


def magnitude_classes_antibalanced(gamma: EdgeColoring) -> bool:
    g = gamma.graph
    for a in gamma.color_set.magnitudes:
        chosen = tuple(e for e, (cu, _) in zip(g.edges, gamma.ends) if abs(cu) == a)
        if not is_balanced(SignedGraph(g.vertices, chosen), "antibalance"):
            return False
    return True


def antiproper_two_coloring(g: SignedGraph) -> EdgeColoring:
    """For antibalanced g: switch to all negative, color every incidence 1, switch back."""
    target = all_negative(g)
    x = switching_equivalent(target, g)
    if x is None:
        raise PreconditionError("graph is not antibalanced")
    base = EdgeColoring(target, 2, tuple((1, 1) for _ in target.edges))
    return switch_coloring(base, x)


def _antiproper_search(g: SignedGraph, n: int) -> bool:
    k = ColorSet(n).k
    order = [g.edge(eid) for eid in dfs_edge_order(g)]
    present: dict[int, dict[int, int]] = {v: {} for v in g.vertices}

    def bump(v: int, c: int, d: int) -> None:
        here = present[v]
        here[c] = here.get(c, 0) + d
        if not here[c]:
            del here[c]

    def place(i: int, top: int) -> bool:
        if i == len(order):
            return True
        e = order[i]
        for c in symmetry_candidates(top, k, False):
            d = -e.sign * c
            if -c in present[e.u] or -d in present[e.v]:
                continue
            bump(e.u, c, 1)
            bump(e.v, d, 1)
            if place(i + 1, max(top, abs(c))):
                return True
            bump(e.u, c, -1)
            bump(e.v, d, -1)
        return False

    return place(0, 0)


def chi_A_exact(g: SignedGraph, *, max_edges: int = CHI_A_MAX_EDGES) -> int:
    """Fewest colors in a zero-free antiproper coloring (even values only)."""
    _guard("chi_A edges", max_edges, g.m)
    if g.m == 0:
        return 0
    n = 2
    while not _antiproper_search(g, n):
        n += 2
    return n


# -- zero-free vertex coloring and balanced decomposition ----------------------


def _vertex_search(g: SignedGraph, n: int) -> dict[int, int] | None:
    k = ColorSet(n).k
    order = sorted(g.vertices)
    colors: dict[int, int] = {}

    def place(i: int, top: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for c in symmetry_candidates(top, k, False):
            if any(colors.get(e.other(x)) is not None and c == e.sign * colors[e.other(x)]
                   for e in g.incident(x)):
                continue
            colors[x] = c
            if place(i + 1, max(top, abs(c))):
                return True
            del colors[x]
        return False

    return dict(colors) if place(0, 0) else None


def chi_star_exact(g: SignedGraph, *, max_vertices: int = CHI_STAR_MAX_VERTICES) -> int:
    """Zero-free vertex chromatic number; 0 for edgeless graphs."""
    _guard("chi_star vertices", max_vertices, g.n)
    if g.m == 0:
        return 0
    n = 2
    while _vertex_search(g, n) is None:
        n += 2
    return n


def delta0_exact(g: SignedGraph, *, max_edges: int = DELTA0_MAX_EDGES) -> int:
    """Fewest balanced edge sets partitioning E (0 for edgeless graphs)."""
    _guard("delta0 edges", max_edges, g.m)
    if g.m == 0:
        return 0
    order = [g.edge(eid) for eid in dfs_edge_order(g)]

    def partition(k: int) -> bool:
        forests = [_ParityForest() for _ in range(k)]

        def place(i: int, top: int) -> bool:
            if i == len(order):
                return True
            e = order[i]
            odd = 1 if e.sign == NEGATIVE else 0
            for m in range(min(top + 1, k)):
                if not forests[m].union(e.u, e.v, odd):
                    continue
                if place(i + 1, max(top, m + 1)):
                    return True
                forests[m].rollback()
            return False

        return place(0, 0)

    k = 1
    while not partition(k):
        k += 1
    return k


def delta0_formula(g: SignedGraph) -> int:
    """ceil(log2 chi*(-g)); defined only when g has an edge."""
    if g.m == 0:
        raise PreconditionError("the balanced decomposition formula needs at least one edge")
    return _ceil_log2(chi_star_exact(negate(g)))


def biparticity(g: SignedGraph) -> int:
    """Fewest bipartite edge sets: delta0 of the all-negative signature."""
    return delta0_exact(all_negative(g))


# -- total colorings ------------------------------------------------------------


@dataclass(frozen=True)
class TotalColoring:
    """Vertex colors (aligned with ``graph.vertices``) plus an incidence coloring."""

    graph: SignedGraph
    n: int
    vertex_colors: tuple[int, ...]
    edges: EdgeColoring

    def __post_init__(self) -> None:
        cs = ColorSet(self.n)
        if len(self.vertex_colors) != self.graph.n:
            raise ColoringError(
                f"expected {self.graph.n} vertex colors, got {len(self.vertex_colors)}"
            )
        for v, c in zip(self.graph.vertices, self.vertex_colors):
            if c not in cs:
                raise ColoringError(f"vertex {v}: color {c} is not in M_{self.n}")
        if self.edges.graph != self.graph or self.edges.n != self.n:
            raise ColoringError("incidence coloring does not match the total coloring")

    @classmethod
    def build(
        cls, graph: SignedGraph, n: int, vertex_colors: Mapping[int, int],
        edge_values: Mapping[int, int],
    ) -> TotalColoring:
        """Vertex colors plus the color of each edge at its first endpoint."""
        edges = EdgeColoring.from_edge_values(graph, n, edge_values)
        return cls(graph, n, tuple(vertex_colors[v] for v in graph.vertices), edges)

    def vertex_color(self, v: int) -> int:
        return self.vertex_colors[self.graph.vertices.index(v)]


def validate_total(g: SignedGraph, mu: TotalColoring, mode: TotalMode = "total") -> Verdict:
    """Check the edge, vertex and incidence clauses, in that order.

    ``total`` needs a proper vertex coloring of -g, ``twisted`` of g.
    """
    if mu.graph != g:
        raise ColoringError("total coloring references a different graph")
    if mode not in ("total", "twisted"):
        raise PreconditionError(f"unknown total coloring mode {mode!r}")
    edge_verdict = validate(mu.edges)
    if not edge_verdict:
        return Verdict(edge_verdict.status, edge_verdict.vertex, edge_verdict.color,
                       edge_verdict.edge_id, edge_verdict.other_edge_id, clause="edge")
    flip = -1 if mode == "total" else 1
    vc = dict(zip(g.vertices, mu.vertex_colors))
    for e in sorted(g.edges, key=lambda f: f.id):
        if vc[e.u] == flip * e.sign * vc[e.v]:
            return Verdict(IMPROPER, vertex=e.u, color=vc[e.u], edge_id=e.id, clause="vertex")
    for v, eid, c in sorted(mu.edges.incidences(), key=lambda t: (t[1], t[0])):
        if c == vc[v]:
            return Verdict(IMPROPER, vertex=v, color=c, edge_id=eid, clause="incidence")
    return PROPER_VERDICT


def switch_total_coloring(mu: TotalColoring, x: Iterable[int]) -> TotalColoring:
    """Negate the colors of switched vertices and of their incidences."""
    xs = frozenset(x)
    g2 = switch(mu.graph, xs)
    vcolors = tuple(-c if v in xs else c for v, c in zip(mu.graph.vertices, mu.vertex_colors))
    return TotalColoring(g2, mu.n, vcolors, switch_coloring(mu.edges, xs))


def is_ordinary_total_coloring(
    g: SignedGraph, vertex_colors: Mapping[int, object], edge_colors: Mapping[int, object]
) -> bool:
    """Ordinary total coloring of the underlying graph (signs ignored)."""
    for e in g.edges:
        if vertex_colors[e.u] == vertex_colors[e.v]:
            return False
        if edge_colors[e.id] in (vertex_colors[e.u], vertex_colors[e.v]):
            return False
    for v in g.vertices:
        here = [edge_colors[e.id] for e in g.incident(v)]
        if len(here) != len(set(here)):
            return False
    return True


def twisted_total_corresponds(g: SignedGraph) -> bool:
    """Twisted total colorings match ordinary ones iff g is balanced and antibalanced."""
    return is_balanced(g) and is_balanced(g, "antibalance")


def find_total_coloring(g: SignedGraph, n: int, mode: TotalMode = "total") -> TotalColoring | None:
    """Backtracking over vertices, then edges; fresh magnitudes only in order and positive."""
    cs = ColorSet(n)
    k, zero = cs.k, not cs.zero_free
    flip = -1 if mode == "total" else 1
    verts = sorted(g.vertices)
    edges = [g.edge(eid) for eid in dfs_edge_order(g)]
    vcol: dict[int, int] = {}
    present: dict[int, set[int]] = {v: set() for v in g.vertices}
    ends: dict[int, tuple[int, int]] = {}

    def place_edge(i: int, top: int) -> bool:
        if i == len(edges):
            return True
        e = edges[i]
        for c in symmetry_candidates(top, k, zero):
            d = -e.sign * c
            if c in present[e.u] or d in present[e.v] or c == vcol[e.u] or d == vcol[e.v]:
                continue
            present[e.u].add(c)
            present[e.v].add(d)
            ends[e.id] = (c, d)
            if place_edge(i + 1, max(top, abs(c))):
                return True
            present[e.u].discard(c)
            present[e.v].discard(d)
        return False

    def place_vertex(i: int, top: int) -> bool:
        if i == len(verts):
            return place_edge(0, top)
        x = verts[i]
        for c in symmetry_candidates(top, k, zero):
            if any(e.other(x) in vcol and c == flip * e.sign * vcol[e.other(x)]
                   for e in g.incident(x)):
                continue
            vcol[x] = c
            if place_vertex(i + 1, max(top, abs(c))):
                return True
            del vcol[x]
        return False

    if not place_vertex(0, 0):
        return None
    edge_coloring = EdgeColoring(g, n, tuple(ends[e.id] for e in g.edges))
    return TotalColoring(g, n, tuple(vcol[v] for v in g.vertices), edge_coloring)


def chi_total_exact(
    g: SignedGraph, mode: TotalMode = "total", *, max_vertices: int = TOTAL_MAX_VERTICES
) -> int:
    """Fewest colors in a (twisted) signed total coloring."""
    _guard("chi_total vertices", max_vertices, g.n)
    n = g.max_degree + 1
    while find_total_coloring(g, n, mode) is None:
        n += 1
    return n


def total_coloring_report(g: SignedGraph, mode: TotalMode = "total") -> ConjectureCheck:
    d = g.max_degree
    return ConjectureCheck(f"{mode}_coloring", chi_total_exact(g, mode), d + 1, d + 2)
