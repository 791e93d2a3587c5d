"""Constructive signed Vizing: fans, shifted colorings and single-edge extension.

Every coloring theorem here is made iterative. Edges are inserted one at a time into a
:class:`~signed_vizing.partial.PartialColoring` and each insertion runs the fan/chain case
analysis of :class:`_Extension`. An unlisted configuration raises
:class:`~signed_vizing.errors.VizingDiagnosticError` instead of guessing a recovery.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field

from .coloring import EdgeColoring, validate
from .config import EngineConfig
from .core import POSITIVE, SignedGraph, max_degree_subgraph, without_edges
from .errors import PreconditionError, VizingDiagnosticError
from .kempe import KempeChain, apply_swap, kempe_chain
from .partial import PartialColoring

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Fan:
    """Fan at ``hinge``: edges e_0..e_s to neighbors v_0..v_s.

    ``initial_colors[i]`` is the color of e_i under the initial coloring (None for the
    uncolored e_0). ``switched`` are the neighbors switched so that every hinge edge is
    negative; ``base`` is the initial coloring in that switched frame (kept only for fans
    built by :func:`build_fan`).
    """

    hinge: int
    edge_ids: tuple[int, ...]
    neighbors: tuple[int, ...]
    initial_colors: tuple[int | None, ...]
    switched: frozenset[int]
    base: PartialColoring | None = field(default=None, compare=False, repr=False)

    @property
    def s(self) -> int:
        return len(self.edge_ids) - 1

    @property
    def initial_edge(self) -> int:
        return self.edge_ids[0]

    def index_of(self, eid: int) -> int | None:
        try:
            return self.edge_ids.index(eid)
        except ValueError:
            return None


@dataclass(frozen=True)
class ShiftedColoring:
    """gamma_i: colors of e_1..e_i moved down one place, e_i left uncolored."""

    fan: Fan
    index: int
    coloring: PartialColoring = field(compare=False)

    @property
    def uncolored_edge(self) -> int:
        return self.fan.edge_ids[self.index]

    def absent_at_hinge(self) -> list[int]:
        return self.coloring.absent(self.fan.hinge)


def move_gap(state: PartialColoring, fan: Fan, i_from: int, i_to: int) -> None:
    """Move the uncolored fan edge from e_{i_from} to e_{i_to} in one batch.

    Downward moves hand each edge the current color of the edge above it, upward moves
    the color of the edge below. Hinge edges are negative, so both ends agree.
    """
    if i_from == i_to:
        return
    u = fan.hinge
    ids = fan.edge_ids
    changes: dict[int, tuple[int, int] | None] = {}
    step = 1 if i_to > i_from else -1
    for j in range(i_from, i_to, step):
        c = state.at(u, ids[j + step])
        if c is None:
            raise VizingDiagnosticError("shift through an uncolored fan edge",
                                        {"hinge": u, "fan": ids, "edge": ids[j + step]})
        changes[ids[j]] = (c, c)
    changes[ids[i_to]] = None
    state.recolor(changes)


def _positive_neighbors(state: PartialColoring, u: int) -> frozenset[int]:
    return frozenset(
        e.other(u) for e in state.graph.incident(u) if state.sign(e.id) == POSITIVE
    )


def _grow_fan(
    state: PartialColoring,
    u: int,
    e0: int,
    first: int | None,
    switched: frozenset[int],
    *,
    snapshot: bool = False,
) -> Fan:
    g = state.graph
    edges = [e0]
    neighbors = [g.edge(e0).other(u)]
    used = {e0}
    if first is not None:
        edges.append(first)
        neighbors.append(g.edge(first).other(u))
        used.add(first)
    spokes = sorted((e for e in g.incident(u) if state.is_colored(e.id)), key=lambda f: f.id)
    while True:
        last = neighbors[-1]
        nxt = None
        for e in spokes:
            if e.id in used:
                continue
            c = state.at(e.other(u), e.id)
            if c is not None and not state.is_present(last, c):
                nxt = e
                break
        if nxt is None:
            break
        edges.append(nxt.id)
        neighbors.append(nxt.other(u))
        used.add(nxt.id)
    colors = tuple(None if i == 0 else state.at(u, eid) for i, eid in enumerate(edges))
    base = state.copy() if snapshot else None
    fan = Fan(u, tuple(edges), tuple(neighbors), colors, switched, base)
    logger.debug("fan at %d: edges %s colors %s", u, fan.edge_ids, colors)
    return fan


def build_fan(
    g: SignedGraph, gamma0: EdgeColoring, e0: int, *, hinge: int | None = None
) -> Fan:
    """Maximal fan for inserting ``e0`` into ``gamma0`` (a proper coloring of g minus e0)."""
    if not g.has_edge(e0):
        raise PreconditionError(f"edge {e0} is not in the graph")
    edge = g.edge(e0)
    u = edge.u if hinge is None else hinge
    if u not in (edge.u, edge.v):
        raise PreconditionError(f"hinge {u} is not an endpoint of edge {e0}")
    state = PartialColoring.from_edge_coloring(g, gamma0)
    switched = _positive_neighbors(state, u)
    state.switch_vertices(switched)
    return _grow_fan(state, u, e0, None, switched, snapshot=True)


def shifted_coloring(fan: Fan, i: int) -> ShiftedColoring:
    if not 0 <= i <= fan.s:
        raise IndexError(i)
    if fan.base is None:
        raise PreconditionError("fan was built without its initial coloring")
    state = fan.base.copy()
    move_gap(state, fan, 0, i)
    return ShiftedColoring(fan, i, state)


def fan_colorings(fan: Fan) -> list[ShiftedColoring]:
    """gamma_0, ..., gamma_s."""
    return [shifted_coloring(fan, i) for i in range(fan.s + 1)]


class _Extension:
    """Colors one uncolored edge ``e0`` at hinge ``u`` in place."""

    def __init__(self, state: PartialColoring, u: int, e0: int, config: EngineConfig) -> None:
        self.state = state
        self.u = u
        self.e0 = e0
        self.config = config
        self.cap = config.round_cap(state.graph.m)
        self.steps = 0
        self.case = "start"
        self.fan: Fan | None = None
        self.switched: frozenset[int] = frozenset()

    def run(self) -> None:
        self._check_preconditions()
        switched = _positive_neighbors(self.state, self.u)
        self.switched = switched
        self.state.switch_vertices(switched)
        try:
            self._extend(self.e0)
        finally:
            self.state.switch_vertices(switched)

    # -- bookkeeping -------------------------------------------------------------

    def _context(self, **extra: object) -> dict[str, object]:
        ctx: dict[str, object] = {"case": self.case, "hinge": self.u, "edge": self.e0}
        if self.fan is not None:
            ctx["fan"] = self.fan.edge_ids
        ctx.update(extra)
        return ctx

    def _tick(self, case: str) -> None:
        self.case = case
        self.steps += 1
        logger.debug("hinge %d edge %d step %d: %s", self.u, self.e0, self.steps, case)
        if self.steps > self.cap:
            raise VizingDiagnosticError("round cap exceeded", self._context(cap=self.cap))
        if self.config.verify_steps:
            verdict = self.state.check()
            if not verdict:
                raise VizingDiagnosticError("partial coloring became improper",
                                            self._context(verdict=verdict))

    def _check_preconditions(self) -> None:
        st, u = self.state, self.u
        if not st.color_set.zero_free:
            raise PreconditionError(f"extension needs a zero-free color set, got n={st.n}")
        edge = st.graph.edge(self.e0)
        if u not in (edge.u, edge.v):
            raise PreconditionError(f"hinge {u} is not an endpoint of edge {self.e0}")
        if st.is_colored(self.e0):
            raise PreconditionError(f"edge {self.e0} is already colored")
        if not st.absent(u):
            raise PreconditionError(f"no color absent at hinge {u}")
        for e in st.graph.incident(u):
            if e.id == self.e0 or st.is_colored(e.id):
                w = e.other(u)
                if not st.absent(w):
                    raise PreconditionError(f"no color absent at neighbor {w} of hinge {u}")

    # -- primitive moves ---------------------------------------------------------

    def _build(self, e0: int, first: int | None = None) -> Fan:
        self.fan = _grow_fan(self.state, self.u, e0, first, self.switched)
        self._tick("fan built")
        return self.fan

    def _shift(self, fan: Fan, i_from: int, i_to: int) -> None:
        move_gap(self.state, fan, i_from, i_to)
        self._tick(f"shift {i_from}->{i_to}")

    def _chain(self, v: int, absent: int, present: int) -> KempeChain:
        return kempe_chain(self.state, v, absent, present)

    def _swap(self, chain: KempeChain) -> None:
        apply_swap(self.state, chain)
        self._tick(f"swap {chain.absent}/{chain.present} at {chain.start}")

    def _color(self, eid: int, c: int, case: str) -> None:
        self.state.color_edge(eid, c, self.u)
        self._tick(case)

    def _blocks(self, chain: KempeChain, target: int) -> bool:
        return chain.ends_at_with(self.u, target)

    def _diagnose(self, message: str, **extra: object) -> VizingDiagnosticError:
        return VizingDiagnosticError(message, self._context(**extra))

    # -- the case analysis -------------------------------------------------------

    def _extend(self, e0: int) -> None:
        st, u = self.state, self.u
        v0 = st.graph.edge(e0).other(u)
        absent_u = st.absent(u)
        for a in absent_u:
            if not st.is_present(v0, a) or not st.is_present(v0, -a):
                self._tick("same magnitude absent at both ends")
                self._lemma_fan(e0, a)
                return

        a = absent_u[0]
        fan = self._build(e0)
        s = fan.s
        vs = fan.neighbors[s]
        b = st.absent(vs)[0]
        self._shift(fan, 0, s)
        es = fan.edge_ids[s]
        if not st.is_present(u, b):
            self._color(es, b, "top color free at hinge")
            return
        if not st.is_present(vs, a):
            self._color(es, a, "hinge color free at top")
            return
        t = self._chain(vs, b, a)
        if not self._blocks(t, a):
            self._swap(t)
            self._color(es, a, "chain misses hinge")
            return

        hit = next(((p, fan.index_of(eid)) for p, eid in enumerate(t.edge_ids)
                    if fan.index_of(eid) is not None), None)
        if hit is None:
            raise self._diagnose("blocking chain never meets the fan", chain=t.vertices)
        pos, k = hit
        assert k is not None
        ek, vk = fan.edge_ids[k], fan.neighbors[k]
        c = st.at(u, ek)
        if c == b:
            self._shift(fan, s, k)
            self._swap(self._chain(vk, b, a))
            self._color(ek, a, "first fan edge carries b")
        elif c == -a:
            self._shift(fan, s, k)
            self._tick("first fan edge carries -a")
            self._lemma_fan(ek, a)
        elif c == -b and t.vertices[pos] == vk:
            self._shift(fan, s, k)
            self._swap(self._chain(vk, -b, -a))
            self._tick("first fan edge carries -b, entered from its neighbor")
            self._lemma_fan(ek, a)
        elif c == -b:
            j = fan.index_of(t.edge_ids[-1])
            if j is None or st.at(u, t.edge_ids[-1]) != b:
                raise self._diagnose("blocking chain does not end on the b edge",
                                     chain=t.vertices)
            if k > j:
                self._shift(fan, s, j)
                self._swap(self._chain(fan.neighbors[j], b, a))
                self._color(fan.edge_ids[j], a, "-b edge above the b edge")
            else:
                self._shift(fan, s, k)
                self._swap(self._chain(vk, -b, -a))
                self._tick("-b edge below the b edge")
                self._lemma_fan(ek, a)
        else:
            raise self._diagnose("first fan edge on the chain has an unexpected color",
                                 color=c, a=a, b=b, chain=t.vertices)

    def _lemma_fan(self, e0: int, a: int) -> None:
        """Insert ``e0`` when ``a`` is absent at the hinge and ``a`` or ``-a`` at its other end."""
        st, u = self.state, self.u
        v0 = st.graph.edge(e0).other(u)
        if not st.is_present(v0, a):
            self._color(e0, a, "a free at both ends")
            return
        if st.is_present(v0, -a):
            raise self._diagnose("neither a nor -a absent at the fan base", a=a)
        if not st.is_present(u, -a):
            self._color(e0, -a, "-a free at both ends")
            return

        first = st.edge_with(u, -a)
        fan = self._build(e0, first)
        s = fan.s
        vs = fan.neighbors[s]
        b = st.absent(vs)[0]
        self._shift(fan, 0, s)
        es = fan.edge_ids[s]
        if not st.is_present(u, b):
            self._color(es, b, "fan lemma: top color free at hinge")
            return
        if not st.is_present(vs, a):
            self._color(es, a, "fan lemma: hinge color free at top")
            return
        t = self._chain(vs, b, a)
        if not self._blocks(t, a):
            self._swap(t)
            self._color(es, a, "fan lemma: chain misses hinge")
            return

        on_chain = sorted(i for i in (fan.index_of(eid) for eid in t.edge_ids) if i is not None)
        jm1 = fan.index_of(t.edge_ids[-1])
        if jm1 is None or st.at(u, t.edge_ids[-1]) != b:
            raise self._diagnose("blocking chain does not end on the b edge", chain=t.vertices)
        if jm1 == on_chain[-1]:
            self._shift(fan, s, jm1)
            self._swap(self._chain(fan.neighbors[jm1], b, a))
            self._color(fan.edge_ids[jm1], a, "fan lemma: b edge highest on chain")
            return

        k = on_chain[-1]
        if len(on_chain) != 3 or on_chain[0] != 0 or st.at(u, fan.edge_ids[0]) != -a \
                or st.at(u, fan.edge_ids[k]) != -b:
            raise self._diagnose("unlisted chain/fan intersection", a=a, b=b,
                                 intersection=tuple(on_chain), chain=t.vertices)
        pos0 = t.index_of(fan.edge_ids[0])
        posk = t.index_of(fan.edge_ids[k])
        assert pos0 is not None and posk is not None
        if pos0 < posk:
            self._shift(fan, s, jm1)
            self._swap(self._chain(fan.neighbors[jm1], b, a))
            self._color(fan.edge_ids[jm1], a, "fan lemma: chain meets -a before -b")
            return

        ek, vk = fan.edge_ids[k], fan.neighbors[k]
        self._shift(fan, s, k)
        self._swap(self._chain(vk, -b, -a))
        if not st.is_present(vk, a):
            self._color(ek, a, "fan lemma: a already free at the -b neighbor")
            return
        along = self._chain(vk, -a, a)
        if not self._blocks(along, a):
            self._swap(along)
            self._color(ek, a, "fan lemma: -a/a chain misses hinge")
            return
        self._shift(fan, k, 0)
        self._swap(self._chain(fan.neighbors[0], -a, a))
        self._color(fan.edge_ids[0], a, "fan lemma: -a/a chain swapped from the base")


def _insert(state: PartialColoring, eid: int, hinge: int, config: EngineConfig) -> None:
    ext = _Extension(state, hinge, eid, config)
    ext.run()
    logger.debug("edge %d colored at hinge %d in %d steps", eid, hinge, ext.steps)


def _insert_all(
    state: PartialColoring, order: Iterable[tuple[int, int]], config: EngineConfig
) -> None:
    for eid, hinge in order:
        _insert(state, eid, hinge, config)
    if config.verify_steps:
        verdict = state.check()
        if not verdict:
            raise VizingDiagnosticError("final coloring is improper", {"verdict": verdict})


def extend_one_edge(
    g: SignedGraph,
    gamma0: EdgeColoring,
    e0: int,
    *,
    hinge: int | None = None,
    config: EngineConfig | None = None,
) -> EdgeColoring:
    """Extend a proper zero-free coloring of g minus ``e0`` to all of ``g``, same n."""
    if not g.has_edge(e0):
        raise PreconditionError(f"edge {e0} is not in the graph")
    if gamma0.graph != without_edges(g, [e0]):
        raise PreconditionError(f"coloring is not a coloring of the graph without edge {e0}")
    if not validate(gamma0):
        raise PreconditionError("initial coloring is not proper")
    edge = g.edge(e0)
    state = PartialColoring.from_edge_coloring(g, gamma0)
    _insert(state, e0, edge.u if hinge is None else hinge, config or EngineConfig())
    return state.to_edge_coloring(g)


def _zero_free_count(delta: int) -> int:
    if delta == 0:
        return 2
    return delta + 1 if delta % 2 else delta + 2


def zero_free_color(
    g: SignedGraph, n: int | None = None, *, config: EngineConfig | None = None
) -> EdgeColoring:
    """Proper zero-free coloring with Delta+1 (Delta odd) or Delta+2 (Delta even) colors.

    Edges are inserted in id order with their first endpoint as hinge.
    """
    delta = g.max_degree
    if n is None:
        n = _zero_free_count(delta)
    elif n % 2 or n < delta + 1:
        raise PreconditionError(f"n must be even and at least {delta + 1}, got {n}")
    state = PartialColoring(g, n)
    _insert_all(state, ((e.id, e.u) for e in sorted(g.edges, key=lambda e: e.id)),
                config or EngineConfig())
    logger.debug("zero-free coloring of %d edges with M_%d", g.m, n)
    return state.to_edge_coloring(g)


def delta_color_independent(g: SignedGraph, *, config: EngineConfig | None = None) -> EdgeColoring:
    """Zero-free Delta-coloring when Delta is even and M(g) has no edges."""
    delta = g.max_degree
    if delta < 2 or delta % 2:
        raise PreconditionError(f"maximum degree must be even and positive, got {delta}")
    if max_degree_subgraph(g).m:
        raise PreconditionError("maximum-degree vertices are not independent")

    removed: list[tuple[int, int]] = []
    rest = g
    while rest.max_degree == delta:
        w = min(v for v in rest.vertices if rest.degree(v) == delta)
        eid = min(e.id for e in rest.incident(w))
        removed.append((eid, w))
        rest = without_edges(rest, [eid])
    logger.debug("removed %d edges at maximum-degree vertices", len(removed))

    state = PartialColoring(g, delta)
    cfg = config or EngineConfig()
    _insert_all(state, ((e.id, e.u) for e in sorted(rest.edges, key=lambda e: e.id)), cfg)
    _insert_all(state, reversed(removed), cfg)
    return state.to_edge_coloring(g)


def greedy_matching(g: SignedGraph) -> list[int]:
    """Maximal matching, greedy over edges in id order."""
    covered: set[int] = set()
    chosen: list[int] = []
    for e in sorted(g.edges, key=lambda f: f.id):
        if e.u not in covered and e.v not in covered:
            chosen.append(e.id)
            covered.update((e.u, e.v))
    return chosen


def color(g: SignedGraph, *, config: EngineConfig | None = None) -> EdgeColoring:
    """Proper coloring from M_{Delta+1}."""
    if g.m == 0:
        return EdgeColoring(g, 1, ())
    delta = g.max_degree
    if delta % 2:
        return zero_free_color(g, config=config)

    matching = greedy_matching(max_degree_subgraph(g))
    rest = without_edges(g, matching)
    if rest.max_degree < delta:
        part = zero_free_color(rest, delta, config=config) if rest.m else None
    else:
        part = delta_color_independent(rest, config=config)
    logger.debug("even maximum degree %d: %d matching edges colored 0", delta, len(matching))

    ends: dict[int, tuple[int, int]] = {eid: (0, 0) for eid in matching}
    if part is not None:
        for e, pair in zip(part.graph.edges, part.ends):
            ends[e.id] = pair
    return EdgeColoring(g, delta + 1, tuple(ends[e.id] for e in g.edges))
