"""Signed graphs: representation, switching, balance and frustration."""
from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Literal

import networkx as nx

from .config import FRUSTRATION_MAX_COMPONENT_VERTICES
from .errors import (
    DuplicateEdgeError,
    GraphValidationError,
    LoopEdgeError,
    PreconditionError,
    SizeGuardError,
    UnderlyingGraphMismatchError,
    UnknownVertexError,
    VertexRangeError,
)

logger = logging.getLogger(__name__)

POSITIVE = 1
NEGATIVE = -1

VertexSet = frozenset[int]
BalanceMode = Literal["balance", "antibalance"]

_SIGN_TOKENS = {"+": POSITIVE, "-": NEGATIVE, "−": NEGATIVE, "+1": POSITIVE, "-1": NEGATIVE}


def parse_sign(token: str | int) -> int:
    """Return +1 or -1 for a sign token ('+', '-', the unicode minus, 1 or -1)."""
    if isinstance(token, bool):
        raise GraphValidationError(f"invalid sign {token!r}")
    if isinstance(token, int):
        if token in (POSITIVE, NEGATIVE):
            return token
        raise GraphValidationError(f"invalid sign {token!r}")
    try:
        return _SIGN_TOKENS[token.strip()]
    except KeyError:
        raise GraphValidationError(f"invalid sign {token!r}") from None


def sign_token(sign: int) -> str:
    """Inverse of :func:`parse_sign` for file output."""
    return "+" if sign == POSITIVE else "-"


@dataclass(frozen=True)
class Edge:
    """Edge ``u v`` with a stable id and a sign in {+1, -1}."""

    id: int
    u: int
    v: int
    sign: int

    @property
    def positive(self) -> bool:
        return self.sign == POSITIVE

    def other(self, x: int) -> int:
        """Endpoint opposite to ``x``."""
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise UnknownVertexError(f"vertex {x} is not an endpoint of edge {self.id}")

    def with_sign(self, sign: int) -> Edge:
        return Edge(self.id, self.u, self.v, sign)


@dataclass(frozen=True)
class SignedGraph:
    """Simple undirected graph with a signature.

    Vertex ids are kept as given so that induced and edge-deleted subgraphs share
    vertex and edge ids with their host. ``build_graph`` produces the dense 1..n form.
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise GraphValidationError("repeated vertex id")
        seen_ids: set[int] = set()
        seen_pairs: dict[frozenset[int], int] = {}
        for e in self.edges:
            if e.sign not in (POSITIVE, NEGATIVE):
                raise GraphValidationError(f"edge {e.id}: sign must be +1 or -1, got {e.sign!r}")
            if e.u not in vset or e.v not in vset:
                raise VertexRangeError(f"edge {e.id}: endpoint outside vertex set ({e.u}, {e.v})")
            if e.u == e.v:
                raise LoopEdgeError(f"edge {e.id}: loop at vertex {e.u}")
            if e.id in seen_ids:
                raise GraphValidationError(f"repeated edge id {e.id}")
            pair = frozenset((e.u, e.v))
            if pair in seen_pairs:
                raise DuplicateEdgeError(
                    f"edge {e.id}: endpoints {e.u},{e.v} already used by edge {seen_pairs[pair]}"
                )
            seen_ids.add(e.id)
            seen_pairs[pair] = e.id

    @cached_property
    def _incidence(self) -> dict[int, tuple[Edge, ...]]:
        inc: dict[int, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.u].append(e)
            inc[e.v].append(e)
        return {v: tuple(es) for v, es in inc.items()}

    @cached_property
    def _by_id(self) -> dict[int, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def _by_pair(self) -> dict[frozenset[int], Edge]:
        return {frozenset((e.u, e.v)): e for e in self.edges}

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e.id for e in self.edges)

    def has_vertex(self, v: int) -> bool:
        return v in self._incidence

    def edge(self, eid: int) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise GraphValidationError(f"no edge with id {eid}") from None

    def has_edge(self, eid: int) -> bool:
        return eid in self._by_id

    def edge_between(self, u: int, v: int) -> Edge | None:
        return self._by_pair.get(frozenset((u, v)))

    def incident(self, v: int) -> tuple[Edge, ...]:
        try:
            return self._incidence[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.incident(v))

    def neighbors(self, v: int) -> list[int]:
        return [e.other(v) for e in self.incident(v)]

    @cached_property
    def max_degree(self) -> int:
        return max((len(es) for es in self._incidence.values()), default=0)

    def sign(self, eid: int) -> int:
        return self.edge(eid).sign

    def signs(self) -> tuple[int, ...]:
        return tuple(e.sign for e in self.edges)

    def underlying(self) -> frozenset[frozenset[int]]:
        """Edge set of the underlying unsigned graph as endpoint pairs."""
        return frozenset(self._by_pair)

    def same_underlying(self, other: SignedGraph) -> bool:
        return set(self.vertices) == set(other.vertices) and self.underlying() == other.underlying()


@dataclass(frozen=True)
class Trail:
    """Alternating vertex/edge sequence with no repeated edge."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.edges) + 1:
            raise GraphValidationError("a trail has exactly one more vertex than edges")
        ids = [e.id for e in self.edges]
        if len(set(ids)) != len(ids):
            raise GraphValidationError("a trail may not repeat an edge")
        for i, e in enumerate(self.edges):
            if {e.u, e.v} != {self.vertices[i], self.vertices[i + 1]}:
                raise GraphValidationError(
                    f"edge {e.id} does not join trail vertices "
                    f"{self.vertices[i]} and {self.vertices[i + 1]}"
                )

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def positive_prefix_count(self, k: int) -> int:
        """Number of positive edges between v_0 and v_k."""
        if not 0 <= k <= self.length:
            raise IndexError(k)
        return sum(1 for e in self.edges[:k] if e.positive)

    def visits(self, v: int) -> list[int]:
        return [i for i, x in enumerate(self.vertices) if x == v]

    def subtrail(self, i: int, j: int) -> Trail:
        return Trail(self.vertices[i : j + 1], self.edges[i:j])


def build_graph(n_vertices: int, signed_edges: Iterable[Sequence[object]]) -> SignedGraph:
    """Validated signed graph on vertices 1..n with edge ids in input order."""
    if n_vertices < 0:
        raise GraphValidationError("vertex count must be non-negative")
    edges: list[Edge] = []
    for idx, item in enumerate(signed_edges, start=1):
        u, v, s = item
        u, v = int(u), int(v)  # type: ignore[call-overload]
        if not (1 <= u <= n_vertices and 1 <= v <= n_vertices):
            raise VertexRangeError(f"edge {idx}: endpoint out of range 1..{n_vertices}: ({u}, {v})")
        edges.append(Edge(idx, u, v, parse_sign(s)))  # type: ignore[arg-type]
    return SignedGraph(tuple(range(1, n_vertices + 1)), tuple(edges))


def _check_vertices(g: SignedGraph, x: Iterable[int]) -> VertexSet:
    xs = frozenset(x)
    unknown = sorted(v for v in xs if not g.has_vertex(v))
    if unknown:
        raise UnknownVertexError(f"unknown vertices in switching set: {unknown}")
    return xs


def switch(g: SignedGraph, x: Iterable[int]) -> SignedGraph:
    """Negate every edge with exactly one endpoint in ``x``."""
    xs = _check_vertices(g, x)
    edges = tuple(
        e.with_sign(-e.sign) if (e.u in xs) != (e.v in xs) else e for e in g.edges
    )
    return SignedGraph(g.vertices, edges)


def negate(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.vertices, tuple(e.with_sign(-e.sign) for e in g.edges))


def with_signs(g: SignedGraph, signs: Sequence[int]) -> SignedGraph:
    """Same underlying graph, signature given in edge order."""
    if len(signs) != g.m:
        raise GraphValidationError(f"expected {g.m} signs, got {len(signs)}")
    edges = tuple(e.with_sign(parse_sign(s)) for e, s in zip(g.edges, signs))
    return SignedGraph(g.vertices, edges)


def all_negative(g: SignedGraph) -> SignedGraph:
    return with_signs(g, [NEGATIVE] * g.m)


def all_signatures(g: SignedGraph) -> Iterator[SignedGraph]:
    """Every signature of the underlying graph; bit i of the index marks edge i negative."""
    for mask in range(1 << g.m):
        yield with_signs(g, [NEGATIVE if mask >> i & 1 else POSITIVE for i in range(g.m)])


def signature_from_mask(g: SignedGraph, mask: int) -> SignedGraph:
    return with_signs(g, [NEGATIVE if mask >> i & 1 else POSITIVE for i in range(g.m)])


def subgraph(g: SignedGraph, vertices: Iterable[int]) -> SignedGraph:
    """Induced signed subgraph; ids preserved."""
    keep = _check_vertices(g, vertices)
    verts = tuple(v for v in g.vertices if v in keep)
    return SignedGraph(verts, tuple(e for e in g.edges if e.u in keep and e.v in keep))


def without_edges(g: SignedGraph, edge_ids: Iterable[int]) -> SignedGraph:
    drop = frozenset(edge_ids)
    return SignedGraph(g.vertices, tuple(e for e in g.edges if e.id not in drop))


def components(g: SignedGraph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, ordered by smallest vertex."""
    found = (tuple(sorted(c)) for c in nx.connected_components(to_networkx(g)))
    return sorted(found, key=lambda c: c[0])


def is_connected(g: SignedGraph) -> bool:
    return len(components(g)) <= 1


def _potentials(g: SignedGraph) -> dict[int, int] | None:
    """Vertex marks s with s(w) = s(v) * sigma(vw) on a spanning forest, or None on conflict."""
    mark: dict[int, int] = {}
    for root in sorted(g.vertices):
        if root in mark:
            continue
        mark[root] = POSITIVE
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for e in g.incident(x):
                y = e.other(x)
                want = mark[x] * e.sign
                if y not in mark:
                    mark[y] = want
                    queue.append(y)
                elif mark[y] != want:
                    return None
    return mark


def is_balanced(g: SignedGraph, mode: BalanceMode = "balance") -> bool:
    """Balance (every circle positive) or antibalance (negation balanced)."""
    if mode == "antibalance":
        return _potentials(negate(g)) is not None
    if mode != "balance":
        raise PreconditionError(f"unknown balance mode {mode!r}")
    return _potentials(g) is not None


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> VertexSet | None:
    """Witness X with switch(g1, X) == g2, or None when the signatures are inequivalent.

    Roots (smallest vertex per component) are never switched.
    """
    if not g1.same_underlying(g2):
        raise UnderlyingGraphMismatchError("signed graphs have different underlying graphs")
    flip: dict[int, bool] = {}
    for root in sorted(g1.vertices):
        if root in flip:
            continue
        flip[root] = False
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for e in sorted(g1.incident(x), key=lambda f: f.id):
                y = e.other(x)
                other = g2.edge_between(e.u, e.v)
                assert other is not None
                differs = e.sign != other.sign
                want = flip[x] != differs
                if y not in flip:
                    flip[y] = want
                    queue.append(y)
                elif flip[y] != want:
                    return None
    return frozenset(v for v, f in flip.items() if f)


def frustration_index(
    g: SignedGraph, max_component_vertices: int = FRUSTRATION_MAX_COMPONENT_VERTICES
) -> int:
    """Fewest negative edges over the switching class of ``g`` (exhaustive per component)."""
    total = 0
    for comp in components(g):
        if len(comp) > max_component_vertices:
            raise SizeGuardError("frustration_index component vertices", max_component_vertices,
                                 len(comp))
        total += _component_frustration(g, comp)
    return total


def _component_frustration(g: SignedGraph, comp: tuple[int, ...]) -> int:
    # Gray-code walk over switchings of every vertex but the root.
    others = comp[1:]
    cset = set(comp)
    signs = {e.id: e.sign for e in g.edges if e.u in cset}
    negatives = sum(1 for s in signs.values() if s == NEGATIVE)
    best = negatives
    for step in range(1, 1 << len(others)):
        bit = (step & -step).bit_length() - 1
        v = others[bit]
        for e in g.incident(v):
            signs[e.id] = -signs[e.id]
            negatives += 1 if signs[e.id] == NEGATIVE else -1
        if negatives < best:
            best = negatives
            if best == 0:
                break
    return best


def max_degree_subgraph(g: SignedGraph) -> SignedGraph:
    """M(g): the subgraph induced by the vertices of maximum degree."""
    delta = g.max_degree
    return subgraph(g, [v for v in g.vertices if g.degree(v) == delta])


def bridges(g: SignedGraph) -> frozenset[int]:
    """Ids of bridge edges."""
    G = to_networkx(g)
    return frozenset(G.edges[a, b]["id"] for a, b in nx.bridges(G))


def to_networkx(g: SignedGraph) -> nx.Graph:
    """Undirected networkx graph with ``sign`` and ``id`` edge attributes."""
    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    for e in g.edges:
        G.add_edge(e.u, e.v, sign=e.sign, id=e.id)
    return G


def from_networkx(G: nx.Graph, default_sign: int = NEGATIVE) -> SignedGraph:
    """Signed graph on 1..n from any simple networkx graph.

    Nodes are relabelled in sorted order (or insertion order when unsortable); edges are
    numbered by sorted endpoint pair. A ``sign`` edge attribute wins over ``default_sign``.
    """
    if G.is_directed() or G.is_multigraph():
        raise GraphValidationError("only simple undirected graphs can be converted")
    try:
        nodes = sorted(G.nodes())
    except TypeError:
        nodes = list(G.nodes())
    label = {x: i for i, x in enumerate(nodes, start=1)}
    pairs = []
    for a, b, data in G.edges(data=True):
        u, v = sorted((label[a], label[b]))
        pairs.append((u, v, data.get("sign", default_sign)))
    pairs.sort()
    return build_graph(len(nodes), pairs)


def circles(g: SignedGraph) -> Iterator[tuple[int, ...]]:
    """Simple circles of ``g`` as edge-id tuples (each circle once)."""
    for cycle in nx.simple_cycles(to_networkx(g)):
        if len(cycle) < 3:
            continue
        ids = []
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            e = g.edge_between(a, b)
            assert e is not None
            ids.append(e.id)
        yield tuple(ids)


def circle_sign(g: SignedGraph, edge_ids: Iterable[int]) -> int:
    product = POSITIVE
    for eid in edge_ids:
        product *= g.sign(eid)
    return product
