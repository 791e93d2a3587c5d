"""Signed Kempe chains and swaps.

The a/b-chain at v_0 (a absent, b present) is the maximal trail that leaves v_0 on
its b incidence and, at every later vertex v_i, uses the incidence pair
{(-1)^t_i a, (-1)^t_i b} where t_i counts the positive edges walked so far.
Unlike ordinary Kempe chains it may visit a vertex twice.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TypeVar

from .coloring import EdgeColoring
from .core import Trail
from .errors import ChainError, ZeroChainSwapError
from .partial import PartialColoring

logger = logging.getLogger(__name__)

ColoringT = TypeVar("ColoringT", EdgeColoring, PartialColoring)


@dataclass(frozen=True)
class KempeChain:
    """An a/b-chain: the trail plus the colors read at both ends of every edge."""

    start: int
    absent: int
    present: int
    trail: Trail
    parities: tuple[int, ...]
    colors: tuple[tuple[int, int], ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.trail.vertices

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e.id for e in self.trail.edges)

    @property
    def end(self) -> int:
        return self.trail.end

    @property
    def length(self) -> int:
        return self.trail.length

    @property
    def end_color(self) -> int:
        """Color of the last incidence, read at the final vertex."""
        return self.colors[-1][1]

    @property
    def has_zero(self) -> bool:
        return self.absent == 0 or self.present == 0

    def is_path(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    def index_of(self, eid: int) -> int | None:
        for i, e in enumerate(self.trail.edges):
            if e.id == eid:
                return i
        return None

    def swap_color(self, c: int) -> int:
        """Image of ``c`` under the swap: a<->b and -a<->-b, everything else fixed."""
        a, b = self.absent, self.present
        if c == a:
            return b
        if c == b:
            return a
        if c == -a:
            return -b
        if c == -b:
            return -a
        return c

    def ends_at_with(self, vertex: int, color: int) -> bool:
        """True when swapping would make ``color`` present at ``vertex`` through the last edge."""
        return self.end == vertex and self.swap_color(self.end_color) == color


def _as_state(gamma: EdgeColoring | PartialColoring) -> PartialColoring:
    if isinstance(gamma, PartialColoring):
        return gamma
    return PartialColoring.from_edge_coloring(gamma.graph, gamma)


def kempe_chain(gamma: EdgeColoring | PartialColoring, v0: int, a: int, b: int) -> KempeChain:
    """The maximal a/b-chain at ``v0`` (``a`` absent there, ``b`` present)."""
    state = _as_state(gamma)
    if state.is_present(v0, a):
        raise ChainError(f"color {a} is present at vertex {v0}")
    if not state.is_present(v0, b):
        raise ChainError(f"color {b} is absent at vertex {v0}")

    vertices = [v0]
    edges = []
    colors: list[tuple[int, int]] = []
    parities = [0]
    used: set[int] = set()
    cur, want, t = v0, b, 0
    while True:
        eid = state.edge_with(cur, want)
        if eid is None or eid in used:
            break
        e = state.edge(eid)
        w = e.other(cur)
        arriving = state.at(w, eid)
        assert arriving is not None
        used.add(eid)
        edges.append(e)
        vertices.append(w)
        colors.append((want, arriving))
        if e.positive:
            t += 1
        parities.append(t)
        s = -1 if t % 2 else 1
        if arriving == s * b:
            want = s * a
        elif arriving == s * a:
            want = s * b
        else:  # pragma: no cover - the edge law makes this unreachable
            raise ChainError(f"edge {eid} breaks the chain alternation at vertex {w}")
        cur = w
    chain = KempeChain(v0, a, b, Trail(tuple(vertices), tuple(edges)), tuple(parities),
                       tuple(colors))
    logger.debug("chain %s/%s at %d: %s", a, b, v0, chain.vertices)
    return chain


def _swapped_ends(state: PartialColoring, chain: KempeChain) -> dict[int, tuple[int, int] | None]:
    if chain.has_zero:
        raise ZeroChainSwapError(
            f"refusing to swap a chain involving 0 "
            f"({chain.absent}/{chain.present} at {chain.start})"
        )
    changes: dict[int, tuple[int, int] | None] = {}
    for e, (c_from, c_to), x in zip(chain.trail.edges, chain.colors, chain.vertices):
        if state.at(x, e.id) != c_from or state.at(e.other(x), e.id) != c_to:
            raise ChainError(f"chain is stale at edge {e.id}")
        host = state.graph.edge(e.id)
        at_u, at_v = (c_from, c_to) if x == host.u else (c_to, c_from)
        changes[e.id] = (chain.swap_color(at_u), chain.swap_color(at_v))
    return changes


def apply_swap(state: PartialColoring, chain: KempeChain) -> None:
    """Swap ``chain`` in place on a partial coloring."""
    state.recolor(_swapped_ends(state, chain))


def kempe_swap(gamma: ColoringT, chain: KempeChain) -> ColoringT:
    """New coloring with a<->b and -a<->-b interchanged on every chain incidence."""
    if isinstance(gamma, PartialColoring):
        out = gamma.copy()
        apply_swap(out, chain)
        return out
    state = _as_state(gamma)
    apply_swap(state, chain)
    return state.to_edge_coloring(gamma.graph)
