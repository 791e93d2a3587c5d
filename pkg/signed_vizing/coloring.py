"""Signed color sets, incidence colorings and their propriety."""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from functools import cached_property

from .core import NEGATIVE, SignedGraph, switch
from .errors import (
    ColoringError,
    ColorSetError,
    EdgeLawError,
    PreconditionError,
    UnknownVertexError,
)

PROPER = "proper"
IMPROPER = "improper"
INVALID_EDGE_LAW = "invalid_edge_law"


def color_key(c: int) -> tuple[int, bool]:
    """Preference order: smaller magnitude first, positive before negative."""
    return (abs(c), c < 0)


@dataclass(frozen=True)
class ColorSet:
    """M_n = {0, +-1, ..., +-k} for n = 2k+1 and {+-1, ..., +-k} for n = 2k."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ColorSetError(f"color count must be at least 1, got {self.n}")

    @property
    def k(self) -> int:
        return self.n // 2

    @property
    def zero_free(self) -> bool:
        return self.n % 2 == 0

    @cached_property
    def members(self) -> tuple[int, ...]:
        body = [c for a in range(1, self.k + 1) for c in (-a, a)]
        if not self.zero_free:
            body.append(0)
        return tuple(sorted(body))

    @cached_property
    def preference(self) -> tuple[int, ...]:
        return tuple(sorted(self.members, key=color_key))

    @property
    def magnitudes(self) -> tuple[int, ...]:
        start = 1 if self.zero_free else 0
        return tuple(range(start, self.k + 1))

    def __contains__(self, c: object) -> bool:
        return isinstance(c, int) and -self.k <= c <= self.k and (c != 0 or not self.zero_free)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return self.n


def make_color_set(n: int) -> ColorSet:
    return ColorSet(n)


def smallest_color_count(colors: Iterable[int]) -> int:
    """Smallest n with every color in M_n (0 for an empty collection)."""
    top = 0
    zero = False
    for c in colors:
        top = max(top, abs(c))
        zero = zero or c == 0
    if zero:
        return 2 * top + 1
    return 2 * top


@dataclass(frozen=True)
class Verdict:
    """Outcome of a propriety check; truthy iff proper.

    ``vertex``/``color``/``edge_id`` locate the first violation. ``clause`` names the
    failed rule for checks with several (total colorings, antiproper, ...).
    """

    status: str
    vertex: int | None = None
    color: int | None = None
    edge_id: int | None = None
    other_edge_id: int | None = None
    clause: str | None = None

    @property
    def ok(self) -> bool:
        return self.status == PROPER

    def __bool__(self) -> bool:
        return self.ok


PROPER_VERDICT = Verdict(PROPER)


@dataclass(frozen=True)
class EdgeColoring:
    """Total n-edge coloring: one color per incidence, stored per edge as (at u, at v).

    ``ends`` is aligned with ``graph.edges``. The edge law is checked on construction
    unless ``enforce_law`` is False (used when reading untrusted files so that
    :func:`validate` can report the violation).
    """

    graph: SignedGraph
    n: int
    ends: tuple[tuple[int, int], ...]
    enforce_law: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self) -> None:
        cs = ColorSet(self.n)
        if len(self.ends) != self.graph.m:
            raise ColoringError(f"expected colors for {self.graph.m} edges, got {len(self.ends)}")
        for e, (cu, cv) in zip(self.graph.edges, self.ends):
            for c in (cu, cv):
                if c not in cs:
                    raise ColorSetError(f"edge {e.id}: color {c} is not in M_{self.n}")
            if self.enforce_law and cu != -e.sign * cv:
                raise EdgeLawError(f"edge {e.id}: colors ({cu}, {cv}) break the edge law")

    @classmethod
    def from_edge_values(
        cls, graph: SignedGraph, n: int, values: Mapping[int, int]
    ) -> EdgeColoring:
        """Color given at each edge's first endpoint; the other end follows the edge law."""
        ends = []
        for e in graph.edges:
            if e.id not in values:
                raise ColoringError(f"edge {e.id} has no color")
            c = values[e.id]
            ends.append((c, -e.sign * c))
        return cls(graph, n, tuple(ends))

    @classmethod
    def from_incidences(
        cls,
        graph: SignedGraph,
        n: int,
        colors: Mapping[tuple[int, int], int],
        enforce_law: bool = True,
    ) -> EdgeColoring:
        ends = []
        for e in graph.edges:
            try:
                ends.append((colors[(e.u, e.id)], colors[(e.v, e.id)]))
            except KeyError as exc:
                raise ColoringError(f"incidence {exc.args[0]} has no color") from None
        return cls(graph, n, tuple(ends), enforce_law=enforce_law)

    @cached_property
    def _index(self) -> dict[int, int]:
        return {e.id: i for i, e in enumerate(self.graph.edges)}

    @property
    def color_set(self) -> ColorSet:
        return ColorSet(self.n)

    def edge_colors(self, eid: int) -> tuple[int, int]:
        try:
            return self.ends[self._index[eid]]
        except KeyError:
            raise ColoringError(f"no edge with id {eid}") from None

    def at(self, v: int, eid: int) -> int:
        e = self.graph.edge(eid)
        cu, cv = self.edge_colors(eid)
        if v == e.u:
            return cu
        if v == e.v:
            return cv
        raise UnknownVertexError(f"vertex {v} is not an endpoint of edge {eid}")

    def __getitem__(self, incidence: tuple[int, int]) -> int:
        v, eid = incidence
        return self.at(v, eid)

    def incidences(self) -> Iterator[tuple[int, int, int]]:
        """(vertex, edge id, color) triples in edge order."""
        for e, (cu, cv) in zip(self.graph.edges, self.ends):
            yield e.u, e.id, cu
            yield e.v, e.id, cv

    def colors_at(self, v: int) -> list[int]:
        return [self.at(v, e.id) for e in self.graph.incident(v)]

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(v, eid): c for v, eid, c in self.incidences()}


def validate(gamma: EdgeColoring, graph: SignedGraph | None = None) -> Verdict:
    """First edge-law violation, else first repeated color at a vertex, else proper.

    Violations are reported in (edge id, vertex id) order.
    """
    g = gamma.graph
    if graph is not None and graph != g:
        raise ColoringError("coloring references a different graph")
    ordered = sorted(zip(g.edges, gamma.ends), key=lambda item: item[0].id)
    for e, (cu, cv) in ordered:
        if cu != -e.sign * cv:
            return Verdict(INVALID_EDGE_LAW, vertex=e.u, color=cu, edge_id=e.id)
    seen: dict[tuple[int, int], int] = {}
    for e, (cu, cv) in ordered:
        for x, c in sorted(((e.u, cu), (e.v, cv))):
            if (x, c) in seen:
                return Verdict(IMPROPER, vertex=x, color=c, edge_id=e.id,
                               other_edge_id=seen[(x, c)])
            seen[(x, c)] = e.id
    return PROPER_VERDICT


def is_proper(gamma: EdgeColoring) -> bool:
    return validate(gamma).ok


def present_colors(gamma: EdgeColoring, v: int) -> list[int]:
    return sorted(gamma.colors_at(v), key=color_key)


def absent_colors(gamma: EdgeColoring, v: int) -> list[int]:
    here = set(gamma.colors_at(v))
    return [c for c in gamma.color_set.preference if c not in here]


def colors_used(gamma: EdgeColoring) -> int:
    """Smallest n such that every color of ``gamma`` lies in M_n."""
    return smallest_color_count(c for _, _, c in gamma.incidences())


def embed(gamma: EdgeColoring, n: int) -> EdgeColoring:
    """The same coloring read in M_n; every used color must fit."""
    return EdgeColoring(gamma.graph, n, gamma.ends, enforce_law=gamma.enforce_law)


def switch_coloring(gamma: EdgeColoring, x: Iterable[int]) -> EdgeColoring:
    """Coloring of switch(g, x): negate every color at an incidence of a vertex in ``x``."""
    g = gamma.graph
    xs = frozenset(x)
    target = switch(g, xs)
    ends = tuple(
        (-cu if e.u in xs else cu, -cv if e.v in xs else cv)
        for e, (cu, cv) in zip(g.edges, gamma.ends)
    )
    return EdgeColoring(target, gamma.n, ends, enforce_law=gamma.enforce_law)


@dataclass(frozen=True)
class Component:
    """Connected piece of a magnitude subgraph, listed in walk order."""

    kind: str  # "path", "circle" or "edge" (a matching edge of the zero class)
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]
    sign: int


@dataclass(frozen=True)
class MagnitudeSubgraph:
    """Edges colored +-a together with their components."""

    magnitude: int
    edge_ids: frozenset[int]
    components: tuple[Component, ...]

    @property
    def circles(self) -> tuple[Component, ...]:
        return tuple(c for c in self.components if c.kind == "circle")

    @property
    def paths(self) -> tuple[Component, ...]:
        return tuple(c for c in self.components if c.kind != "circle")

    def is_matching(self) -> bool:
        return all(len(c.edge_ids) == 1 for c in self.components)

    def is_balanced(self) -> bool:
        return all(c.sign == 1 for c in self.circles)

    def component_of(self, eid: int) -> Component:
        for comp in self.components:
            if eid in comp.edge_ids:
                return comp
        raise ColoringError(f"edge {eid} is not colored with magnitude {self.magnitude}")


def magnitude_subgraph(gamma: EdgeColoring, a: int) -> MagnitudeSubgraph:
    """Sigma_a[gamma]: the edges colored +-a and their path/circle decomposition."""
    if a not in gamma.color_set.magnitudes:
        raise ColorSetError(f"{a} is not a magnitude of M_{gamma.n}")
    g = gamma.graph
    chosen = [e for e, (cu, _) in zip(g.edges, gamma.ends) if abs(cu) == a]
    adj: dict[int, list] = {}
    for e in chosen:
        adj.setdefault(e.u, []).append(e)
        adj.setdefault(e.v, []).append(e)
    cap = 1 if a == 0 else 2
    for v, es in adj.items():
        if len(es) > cap:
            raise ColoringError(
                f"vertex {v} meets {len(es)} edges of magnitude {a}; coloring is improper"
            )
    for es in adj.values():
        es.sort(key=lambda e: e.id)

    seen_edges: set[int] = set()
    comps: list[Component] = []
    # paths first from their degree-one ends, then whatever is left is a circle
    starts = sorted(v for v, es in adj.items() if len(es) == 1) + sorted(
        v for v, es in adj.items() if len(es) == 2
    )
    for start in starts:
        if all(e.id in seen_edges for e in adj[start]):
            continue
        verts = [start]
        ids: list[int] = []
        sign = 1
        cur = start
        while True:
            nxt = next((e for e in adj[cur] if e.id not in seen_edges), None)
            if nxt is None:
                break
            seen_edges.add(nxt.id)
            ids.append(nxt.id)
            sign *= nxt.sign
            cur = nxt.other(cur)
            verts.append(cur)
        closed = len(verts) > 2 and verts[0] == verts[-1]
        if closed:
            kind = "circle"
            verts.pop()
        else:
            kind = "edge" if a == 0 else "path"
        comps.append(Component(kind, tuple(verts), tuple(ids), sign))
    return MagnitudeSubgraph(a, frozenset(e.id for e in chosen), tuple(comps))


def collapse_all_negative(gamma: EdgeColoring) -> dict[int, int]:
    """Ordinary edge coloring read off an all-negative signed coloring."""
    g = gamma.graph
    if any(e.sign != NEGATIVE for e in g.edges):
        raise PreconditionError("collapse requires an all-negative graph")
    return {e.id: cu for e, (cu, _) in zip(g.edges, gamma.ends)}


def lift_ordinary(g: SignedGraph, n: int, colors: Mapping[int, int]) -> EdgeColoring:
    """Inverse of :func:`collapse_all_negative`."""
    if any(e.sign != NEGATIVE for e in g.edges):
        raise PreconditionError("lift requires an all-negative graph")
    return EdgeColoring(g, n, tuple((colors[e.id], colors[e.id]) for e in g.edges))


def is_proper_ordinary_edge_coloring(g: SignedGraph, colors: Mapping[int, object]) -> bool:
    for v in g.vertices:
        here = [colors[e.id] for e in g.incident(v)]
        if len(here) != len(set(here)):
            return False
    return True
