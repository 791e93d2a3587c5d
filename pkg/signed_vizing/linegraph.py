"""Bidirected graphs, signed line graphs and the edge/vertex coloring transport."""
from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from itertools import combinations
from typing import Literal

from .coloring import IMPROPER, PROPER_VERDICT, ColorSet, EdgeColoring, Verdict
from .core import NEGATIVE, POSITIVE, Edge, SignedGraph, negate
from .errors import ColoringError, ColorSetError, GraphValidationError, UnknownVertexError

EdgeKind = Literal["extraverted", "introverted", "coherent"]


@dataclass(frozen=True)
class BidirectedGraph:
    """Underlying graph plus tau on every incidence, stored per edge as (at u, at v).

    Edge signs of ``graph`` are ignored; the signature is derived from tau.
    """

    graph: SignedGraph
    tau: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if len(self.tau) != self.graph.m:
            raise GraphValidationError(
                f"expected tau for {self.graph.m} edges, got {len(self.tau)}"
            )
        for e, pair in zip(self.graph.edges, self.tau):
            if any(t not in (POSITIVE, NEGATIVE) for t in pair):
                raise GraphValidationError(f"edge {e.id}: tau values must be +1 or -1, got {pair}")

    def _index(self, eid: int) -> int:
        for i, e in enumerate(self.graph.edges):
            if e.id == eid:
                return i
        raise GraphValidationError(f"no edge with id {eid}")

    def tau_at(self, v: int, eid: int) -> int:
        e = self.graph.edge(eid)
        tu, tv = self.tau[self._index(eid)]
        if v == e.u:
            return tu
        if v == e.v:
            return tv
        raise UnknownVertexError(f"vertex {v} is not an endpoint of edge {eid}")

    def sigma(self, eid: int) -> int:
        tu, tv = self.tau[self._index(eid)]
        return -tu * tv

    def kind(self, eid: int) -> EdgeKind:
        tu, tv = self.tau[self._index(eid)]
        if tu == tv == POSITIVE:
            return "extraverted"
        if tu == tv == NEGATIVE:
            return "introverted"
        return "coherent"

    def incidences(self) -> Iterator[tuple[int, int, int]]:
        for e, (tu, tv) in zip(self.graph.edges, self.tau):
            yield e.u, e.id, tu
            yield e.v, e.id, tv


def orient(g: SignedGraph) -> BidirectedGraph:
    """Canonical orientation: negative edges extraverted, positive edges low id -> high id."""
    tau = []
    for e in g.edges:
        if e.sign == NEGATIVE:
            tau.append((POSITIVE, POSITIVE))
        else:
            tau.append((POSITIVE, NEGATIVE) if e.u < e.v else (NEGATIVE, POSITIVE))
    return BidirectedGraph(g, tuple(tau))


def signed_of(b: BidirectedGraph) -> SignedGraph:
    """Sigma_B with sigma(e) = -tau(v,e) tau(w,e)."""
    edges = tuple(e.with_sign(-tu * tv) for e, (tu, tv) in zip(b.graph.edges, b.tau))
    return SignedGraph(b.graph.vertices, edges)


def reorient(b: BidirectedGraph, eid: int) -> BidirectedGraph:
    """Negate tau at both ends of one edge; the signature is unchanged."""
    i = b._index(eid)
    tau = list(b.tau)
    tu, tv = tau[i]
    tau[i] = (-tu, -tv)
    return BidirectedGraph(b.graph, tuple(tau))


def bidirected_line_graph(b: BidirectedGraph) -> BidirectedGraph:
    """L(B): one vertex per edge (same id), one edge per adjacent pair, ordered by pair.

    The line edge l_e l_f through the shared vertex v carries tau(v,e) at l_e and
    tau(v,f) at l_f.
    """
    g = b.graph
    pairs: list[tuple[int, int, int, int]] = []
    for v in g.vertices:
        for e, f in combinations(sorted(g.incident(v), key=lambda x: x.id), 2):
            pairs.append((e.id, f.id, b.tau_at(v, e.id), b.tau_at(v, f.id)))
    pairs.sort()
    edges = tuple(Edge(i, e, f, -te * tf) for i, (e, f, te, tf) in enumerate(pairs, start=1))
    line = SignedGraph(tuple(sorted(g.edge_ids)), edges)
    return BidirectedGraph(line, tuple((te, tf) for _, _, te, tf in pairs))


def line_graph(g: SignedGraph) -> SignedGraph:
    """Representative of the signed line graph, through the canonical orientation."""
    return signed_of(bidirected_line_graph(orient(g)))


@dataclass(frozen=True)
class VertexColoring:
    """Colors from M_n on the vertices of ``graph``, aligned with ``graph.vertices``."""

    graph: SignedGraph
    n: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        cs = ColorSet(self.n)
        if len(self.colors) != self.graph.n:
            raise ColoringError(f"expected {self.graph.n} vertex colors, got {len(self.colors)}")
        for v, c in zip(self.graph.vertices, self.colors):
            if c not in cs:
                raise ColorSetError(f"vertex {v}: color {c} is not in M_{self.n}")

    @classmethod
    def from_mapping(cls, graph: SignedGraph, n: int, colors: Mapping[int, int]) -> VertexColoring:
        try:
            return cls(graph, n, tuple(colors[v] for v in graph.vertices))
        except KeyError as exc:
            raise ColoringError(f"vertex {exc.args[0]} has no color") from None

    def at(self, v: int) -> int:
        try:
            return self.colors[self.graph.vertices.index(v)]
        except ValueError:
            raise UnknownVertexError(f"unknown vertex {v}") from None

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.graph.vertices, self.colors))


def is_proper_vertex_coloring(g: SignedGraph, c: VertexColoring) -> Verdict:
    """Zaslavsky propriety: c(x) != sigma(xy) c(y) on every edge, first violation by edge id."""
    if c.graph.vertices != g.vertices:
        raise ColoringError("vertex coloring references a different graph")
    colors = c.as_dict()
    for e in sorted(g.edges, key=lambda f: f.id):
        cx, cy = colors[e.u], colors[e.v]
        if cx == e.sign * cy:
            clause = "positive" if e.sign == POSITIVE else "negative"
            return Verdict(IMPROPER, vertex=e.u, color=cx, edge_id=e.id, clause=clause)
    return PROPER_VERDICT


def bidirected_coloring(b: BidirectedGraph, gamma: EdgeColoring) -> dict[int, int]:
    """gamma_B(e) = tau(v,e) gamma(v,e); the same value from either end."""
    out: dict[int, int] = {}
    for e, (tu, tv) in zip(b.graph.edges, b.tau):
        cu, cv = gamma.edge_colors(e.id)
        if tu * cu != tv * cv:
            raise ColoringError(f"edge {e.id}: coloring does not fit the orientation")
        out[e.id] = tu * cu
    return out


def incidence_coloring(b: BidirectedGraph, colors: Mapping[int, int], n: int) -> EdgeColoring:
    """Inverse of :func:`bidirected_coloring`: gamma(v,e) = tau(v,e) gamma_B(e) on Sigma_B."""
    target = signed_of(b)
    ends = tuple((tu * colors[e.id], tv * colors[e.id]) for e, (tu, tv) in zip(target.edges, b.tau))
    return EdgeColoring(target, n, ends)


def _transport_target(g: SignedGraph, antiproper: bool) -> SignedGraph:
    line = line_graph(g)
    return line if antiproper else negate(line)


def edge_to_vertex_coloring(
    g: SignedGraph, gamma: EdgeColoring, *, antiproper: bool = False
) -> VertexColoring:
    """Vertex coloring of -Lambda(g) (of Lambda(g) when ``antiproper``) read through orient(g)."""
    if gamma.graph != g:
        raise ColoringError("coloring references a different graph")
    values = bidirected_coloring(orient(g), gamma)
    return VertexColoring.from_mapping(_transport_target(g, antiproper), gamma.n, values)


def vertex_to_edge_coloring(
    g: SignedGraph, c: VertexColoring, *, antiproper: bool = False
) -> EdgeColoring:
    """Inverse of :func:`edge_to_vertex_coloring`."""
    if c.graph != _transport_target(g, antiproper):
        raise ColoringError("vertex coloring is not on the line graph of this signed graph")
    b = orient(g)
    colors = c.as_dict()
    return EdgeColoring(g, c.n, tuple((tu * colors[e.id], tv * colors[e.id])
                                      for e, (tu, tv) in zip(g.edges, b.tau)))
