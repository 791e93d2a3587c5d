"""Partial incidence colorings: the mutable state of the extension engine.

Uncolored edges are invisible to every query here (presence, absence, chains), so a
graph whose later edges have not been inserted yet behaves like the edge-deleted
graph. The state keeps its own copy of the signature because the engine switches
vertices locally while it works.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping

from .coloring import IMPROPER, INVALID_EDGE_LAW, PROPER_VERDICT, ColorSet, EdgeColoring, Verdict
from .core import Edge, SignedGraph
from .errors import ColoringError, VizingDiagnosticError


class PartialColoring:
    """Proper coloring of some of the edges of ``graph`` with colors from M_n."""

    def __init__(self, graph: SignedGraph, n: int) -> None:
        self.graph = graph
        self.color_set = ColorSet(n)
        self._sign: dict[int, int] = {e.id: e.sign for e in graph.edges}
        self._ends: dict[int, tuple[int, int]] = {}
        self._at: dict[int, dict[int, int]] = {v: {} for v in graph.vertices}

    @property
    def n(self) -> int:
        return self.color_set.n

    @classmethod
    def from_edge_coloring(
        cls, graph: SignedGraph, gamma: EdgeColoring, n: int | None = None
    ) -> PartialColoring:
        """Load ``gamma`` (a coloring of a spanning subgraph of ``graph``)."""
        state = cls(graph, gamma.n if n is None else n)
        for e, (cu, cv) in zip(gamma.graph.edges, gamma.ends):
            host = graph.edge(e.id)
            if (host.u, host.v, host.sign) != (e.u, e.v, e.sign):
                raise ColoringError(f"edge {e.id} differs between coloring and graph")
            state._put(e.id, cu, cv)
        return state

    def copy(self) -> PartialColoring:
        other = PartialColoring.__new__(PartialColoring)
        other.graph = self.graph
        other.color_set = self.color_set
        other._sign = dict(self._sign)
        other._ends = dict(self._ends)
        other._at = {v: dict(m) for v, m in self._at.items()}
        return other

    # -- queries -----------------------------------------------------------------

    def sign(self, eid: int) -> int:
        return self._sign[eid]

    def edge(self, eid: int) -> Edge:
        """Edge with its current (possibly locally switched) sign."""
        return self.graph.edge(eid).with_sign(self._sign[eid])

    def is_colored(self, eid: int) -> bool:
        return eid in self._ends

    def uncolored(self) -> list[int]:
        return [e.id for e in self.graph.edges if e.id not in self._ends]

    def at(self, v: int, eid: int) -> int | None:
        ends = self._ends.get(eid)
        if ends is None:
            return None
        e = self.graph.edge(eid)
        return ends[0] if v == e.u else ends[1]

    def is_present(self, v: int, c: int) -> bool:
        return c in self._at[v]

    def present(self, v: int) -> set[int]:
        return set(self._at[v])

    def absent(self, v: int) -> list[int]:
        here = self._at[v]
        return [c for c in self.color_set.preference if c not in here]

    def edge_with(self, v: int, c: int) -> int | None:
        """Id of the edge whose incidence at ``v`` carries ``c``."""
        return self._at[v].get(c)

    # -- mutation ----------------------------------------------------------------

    def _put(self, eid: int, cu: int, cv: int) -> None:
        e = self.graph.edge(eid)
        if cu not in self.color_set or cv not in self.color_set:
            raise VizingDiagnosticError("color outside M_n", {"edge": eid, "colors": (cu, cv)})
        if cu != -self._sign[eid] * cv:
            raise VizingDiagnosticError("edge law broken", {"edge": eid, "colors": (cu, cv)})
        for x, c in ((e.u, cu), (e.v, cv)):
            holder = self._at[x].get(c)
            if holder is not None and holder != eid:
                raise VizingDiagnosticError(
                    "color already present",
                    {"edge": eid, "vertex": x, "color": c, "holder": holder},
                )
        self._ends[eid] = (cu, cv)
        self._at[e.u][cu] = eid
        self._at[e.v][cv] = eid

    def _drop(self, eid: int) -> tuple[int, int] | None:
        ends = self._ends.pop(eid, None)
        if ends is not None:
            e = self.graph.edge(eid)
            del self._at[e.u][ends[0]]
            del self._at[e.v][ends[1]]
        return ends

    def color_edge(self, eid: int, color: int, at: int) -> None:
        """Color an uncolored edge with ``color`` at endpoint ``at``."""
        if eid in self._ends:
            raise VizingDiagnosticError("edge is already colored", {"edge": eid})
        e = self.graph.edge(eid)
        other = -self._sign[eid] * color
        if at == e.u:
            self._put(eid, color, other)
        else:
            self._put(eid, other, color)

    def uncolor(self, eid: int) -> tuple[int, int] | None:
        return self._drop(eid)

    def recolor(self, changes: Mapping[int, tuple[int, int] | None]) -> None:
        """Apply several (at u, at v) recolorings at once; None uncolors.

        All touched edges are cleared first so that colors may move between them.
        """
        for eid in changes:
            self._drop(eid)
        for eid, ends in changes.items():
            if ends is not None:
                self._put(eid, *ends)

    def switch_vertices(self, xs: Iterable[int]) -> None:
        """Switch the vertices in ``xs``: flip boundary signs, negate their incidence colors."""
        xset = set(xs)
        if not xset:
            return
        touched: set[int] = set()
        for x in xset:
            for e in self.graph.incident(x):
                touched.add(e.id)
        changes: dict[int, tuple[int, int] | None] = {}
        for eid in touched:
            e = self.graph.edge(eid)
            if (e.u in xset) != (e.v in xset):
                self._sign[eid] = -self._sign[eid]
            ends = self._ends.get(eid)
            if ends is not None:
                cu, cv = ends
                changes[eid] = (-cu if e.u in xset else cu, -cv if e.v in xset else cv)
        for eid in changes:
            self._drop(eid)
        for eid, ends in changes.items():
            assert ends is not None
            self._put(eid, *ends)

    # -- export ------------------------------------------------------------------

    def current_graph(self) -> SignedGraph:
        return SignedGraph(self.graph.vertices, tuple(self.edge(e.id) for e in self.graph.edges))

    def check(self) -> Verdict:
        """Re-derive propriety from scratch (edge law and repeated colors)."""
        seen: dict[tuple[int, int], int] = {}
        for e in sorted(self.graph.edges, key=lambda f: f.id):
            ends = self._ends.get(e.id)
            if ends is None:
                continue
            cu, cv = ends
            if cu != -self._sign[e.id] * cv:
                return Verdict(INVALID_EDGE_LAW, vertex=e.u, color=cu, edge_id=e.id)
            for x, c in ((e.u, cu), (e.v, cv)):
                if (x, c) in seen:
                    return Verdict(IMPROPER, vertex=x, color=c, edge_id=e.id,
                                   other_edge_id=seen[(x, c)])
                seen[(x, c)] = e.id
        return PROPER_VERDICT

    def to_edge_coloring(self, graph: SignedGraph | None = None) -> EdgeColoring:
        """Total coloring; ``graph`` defaults to the graph with the current signs."""
        missing = self.uncolored()
        if missing:
            raise ColoringError(f"edges still uncolored: {missing}")
        target = self.current_graph() if graph is None else graph
        if target.signs() != tuple(self._sign[e.id] for e in target.edges):
            raise ColoringError("target graph signs differ from the coloring state")
        return EdgeColoring(target, self.n, tuple(self._ends[e.id] for e in target.edges))
