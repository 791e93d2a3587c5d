"""Exact oracles: chromatic index, class, class ratio and 3-colorable cubic signatures.

All searches are exhaustive and guarded by the ``*_MAX_*`` constants in
:mod:`signed_vizing.config`.
"""
from __future__ import annotations

import logging
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal

import networkx as nx

from .coloring import ColorSet, EdgeColoring
from .config import (
    CLASS_RATIO_MAX_EDGES,
    EXACT_MAX_EDGES,
    HAMILTONIAN_MAX_VERTICES,
    MATCHING_MAX_VERTICES,
)
from .core import (
    NEGATIVE,
    POSITIVE,
    SignedGraph,
    bridges,
    components,
    is_connected,
    signature_from_mask,
    to_networkx,
    with_signs,
)
from .errors import (
    NotCubicBridgelessError,
    PreconditionError,
    SizeGuardError,
    VizingDiagnosticError,
)

logger = logging.getLogger(__name__)

GraphClass = Literal["class1", "class2"]
RatioMode = Literal["full", "switching"]


def _guard(name: str, limit: int, actual: int) -> None:
    if actual > limit:
        raise SizeGuardError(name, limit, actual)


def dfs_edge_order(g: SignedGraph) -> list[int]:
    """Edge ids in a connected depth-first order (each edge when first seen)."""
    seen_v: set[int] = set()
    seen_e: set[int] = set()
    order: list[int] = []
    for root in sorted(g.vertices):
        if root in seen_v:
            continue
        stack = [root]
        while stack:
            x = stack.pop()
            if x in seen_v:
                continue
            seen_v.add(x)
            for e in sorted(g.incident(x), key=lambda f: f.id, reverse=True):
                if e.id not in seen_e:
                    seen_e.add(e.id)
                    order.append(e.id)
                y = e.other(x)
                if y not in seen_v:
                    stack.append(y)
    return order


def symmetry_candidates(top: int, k: int, zero: bool) -> tuple[int, ...]:
    # magnitudes above ``top`` are interchangeable, and so is the sign of a fresh one
    body = [c for c in range(-top, top + 1) if c != 0 or zero]
    if top < k:
        body.append(top + 1)
    return tuple(sorted(body))


def _search(g: SignedGraph, n: int) -> dict[int, tuple[int, int]] | None:
    cs = ColorSet(n)
    k, zero = cs.k, not cs.zero_free
    edges = [g.edge(eid) for eid in dfs_edge_order(g)]
    present: dict[int, set[int]] = {v: set() for v in g.vertices}
    ends: dict[int, tuple[int, int]] = {}
    table = {top: symmetry_candidates(top, k, zero) for top in range(k + 1)}

    def place(i: int, top: int) -> bool:
        if i == len(edges):
            return True
        e = edges[i]
        pu, pv = present[e.u], present[e.v]
        for c in table[top]:
            d = -e.sign * c
            if c in pu or d in pv:
                continue
            pu.add(c)
            pv.add(d)
            ends[e.id] = (c, d)
            if place(i + 1, max(top, abs(c))):
                return True
            pu.discard(c)
            pv.discard(d)
        ends.pop(e.id, None)
        return False

    return dict(ends) if place(0, 0) else None


def find_coloring(
    g: SignedGraph, n: int, *, max_edges: int = EXACT_MAX_EDGES
) -> EdgeColoring | None:
    """A proper coloring from M_n, or None."""
    _guard("exact edges", max_edges, g.m)
    if g.m == 0:
        return EdgeColoring(g, max(n, 1), ())
    if n < g.max_degree:
        return None
    found = _search(g, n)
    if found is None:
        return None
    return EdgeColoring(g, n, tuple(found[e.id] for e in g.edges))


def is_colorable(g: SignedGraph, n: int, *, max_edges: int = EXACT_MAX_EDGES) -> bool:
    return find_coloring(g, n, max_edges=max_edges) is not None


def exact_coloring(g: SignedGraph, *, max_edges: int = EXACT_MAX_EDGES) -> tuple[int, EdgeColoring]:
    """(chi', witness); edgeless graphs give (0, an empty coloring in M_1)."""
    _guard("exact edges", max_edges, g.m)
    if g.m == 0:
        return 0, EdgeColoring(g, 1, ())
    n = g.max_degree
    while True:
        found = find_coloring(g, n, max_edges=max_edges)
        if found is not None:
            return n, found
        n += 1


def exact_chromatic_index(g: SignedGraph, *, max_edges: int = EXACT_MAX_EDGES) -> int:
    """Smallest n with a proper coloring from M_n."""
    return exact_coloring(g, max_edges=max_edges)[0]


def class_of(g: SignedGraph, *, max_edges: int = EXACT_MAX_EDGES) -> GraphClass:
    chi = exact_chromatic_index(g, max_edges=max_edges)
    return "class1" if chi == g.max_degree else "class2"


def ordinary_chromatic_index(g: SignedGraph, *, max_edges: int = EXACT_MAX_EDGES) -> int:
    """Chromatic index of the underlying unsigned graph (plain backtracking, signs ignored)."""
    _guard("exact edges", max_edges, g.m)
    if g.m == 0:
        return 0
    edges = [g.edge(eid) for eid in dfs_edge_order(g)]

    def colorable(k: int) -> bool:
        used: dict[int, set[int]] = {v: set() for v in g.vertices}

        def place(i: int, top: int) -> bool:
            if i == len(edges):
                return True
            e = edges[i]
            for c in range(1, min(top + 1, k) + 1):
                if c in used[e.u] or c in used[e.v]:
                    continue
                used[e.u].add(c)
                used[e.v].add(c)
                if place(i + 1, max(top, c)):
                    return True
                used[e.u].discard(c)
                used[e.v].discard(c)
            return False

        return place(0, 0)

    k = g.max_degree
    while not colorable(k):
        k += 1
    return k


@dataclass(frozen=True)
class ClassRatio:
    """Delta-colorable signatures over all 2^m signatures, kept unreduced for printing."""

    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        if not 0 <= self.numerator <= self.denominator:
            raise PreconditionError(f"invalid ratio {self.numerator}/{self.denominator}")

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def _count_colorable(payload: tuple[SignedGraph, tuple[int, ...], int, int]) -> int:
    base, free_edges, start, stop = payload
    delta = base.max_degree
    index = {e.id: i for i, e in enumerate(base.edges)}
    count = 0
    for mask in range(start, stop):
        signs = [e.sign for e in base.edges]
        for bit, eid in enumerate(free_edges):
            signs[index[eid]] = NEGATIVE if mask >> bit & 1 else POSITIVE
        if _search(with_signs(base, signs), delta) is not None:
            count += 1
    return count


def _spanning_forest(g: SignedGraph) -> set[int]:
    """Edge ids of the spanning forest that prefers smaller ids."""
    forest = nx.minimum_spanning_edges(to_networkx(g), weight="id", data=True)
    return {data["id"] for _, _, data in forest}


def _chunks(total: int, jobs: int) -> Iterator[tuple[int, int]]:
    size = max(1, -(-total // max(jobs, 1)))
    for start in range(0, total, size):
        yield start, min(total, start + size)


def class_ratio(
    g: SignedGraph,
    *,
    mode: RatioMode = "full",
    jobs: int = 1,
    max_edges: int = CLASS_RATIO_MAX_EDGES,
) -> ClassRatio:
    """C(g): Delta-colorable signatures of the underlying graph divided by 2^m.

    ``switching`` mode colors one representative per switching class (every spanning
    forest edge positive) and weights it by the class size 2^(n-c).
    """
    _guard("class_ratio edges", max_edges, g.m)
    denominator = 1 << g.m
    if g.m == 0:
        return ClassRatio(1, 1)
    if mode == "full":
        base = with_signs(g, [POSITIVE] * g.m)
        free = tuple(e.id for e in g.edges)
        weight = 1
    elif mode == "switching":
        tree = _spanning_forest(g)
        base = with_signs(g, [POSITIVE] * g.m)
        free = tuple(e.id for e in g.edges if e.id not in tree)
        weight = 1 << len(tree)
    else:
        raise PreconditionError(f"unknown class_ratio mode {mode!r}")

    total = 1 << len(free)
    payloads = [(base, free, a, b) for a, b in _chunks(total, jobs)]
    if jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            counts = list(pool.map(_count_colorable, payloads))
    else:
        counts = [_count_colorable(p) for p in payloads]
    numerator = sum(counts) * weight
    logger.debug("class ratio (%s mode, %d chunks): %d/%d", mode, len(payloads), numerator,
                  denominator)
    return ClassRatio(numerator, denominator)


def signatures_by_class(
    g: SignedGraph, *, max_edges: int = CLASS_RATIO_MAX_EDGES
) -> dict[int, str]:
    """Class of every signature, keyed by its mask (bit i marks edge i negative)."""
    _guard("class_ratio edges", max_edges, g.m)
    out: dict[int, str] = {}
    for mask in range(1 << g.m):
        sig = signature_from_mask(g, mask)
        out[mask] = "class1" if g.m == 0 or _search(sig, g.max_degree) else "class2"
    return out


def perfect_matching(
    g: SignedGraph, *, max_vertices: int = MATCHING_MAX_VERTICES
) -> tuple[int, ...] | None:
    """Edge ids of a perfect matching (memoized search on unmatched-vertex masks), or None."""
    _guard("perfect_matching vertices", max_vertices, g.n)
    verts = sorted(g.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    adj = [[(pos[e.other(v)], e.id) for e in sorted(g.incident(v), key=lambda f: f.id)]
           for v in verts]

    @lru_cache(maxsize=None)
    def solve(mask: int) -> tuple[int, ...] | None:
        if mask == 0:
            return ()
        i = (mask & -mask).bit_length() - 1
        for j, eid in adj[i]:
            if mask >> j & 1:
                rest = solve(mask & ~(1 << i) & ~(1 << j))
                if rest is not None:
                    return (eid, *rest)
        return None

    found = solve((1 << len(verts)) - 1)
    return None if found is None else tuple(sorted(found))


def is_hamiltonian(g: SignedGraph, *, max_vertices: int = HAMILTONIAN_MAX_VERTICES) -> bool:
    """Whether the underlying graph has a Hamiltonian circle (n >= 3)."""
    _guard("is_hamiltonian vertices", max_vertices, g.n)
    if g.n < 3 or not is_connected(g):
        return False
    start = min(g.vertices)
    nbrs = {v: sorted(g.neighbors(v)) for v in g.vertices}
    visited = {start}

    def extend(x: int) -> bool:
        if len(visited) == g.n:
            return start in nbrs[x]
        for y in nbrs[x]:
            if y not in visited:
                visited.add(y)
                if extend(y):
                    return True
                visited.discard(y)
        return False

    return extend(start)


@dataclass(frozen=True)
class SignatureWitness:
    """A 3-colorable signature of a cubic bridgeless graph with its coloring."""

    graph: SignedGraph
    matching: tuple[int, ...]
    coloring: EdgeColoring


def check_cubic_bridgeless(g: SignedGraph) -> None:
    if g.n == 0 or any(g.degree(v) != 3 for v in g.vertices):
        raise NotCubicBridgelessError("graph is not 3-regular")
    if not is_connected(g):
        raise NotCubicBridgelessError("graph is not connected")
    found = bridges(g)
    if found:
        raise NotCubicBridgelessError(f"graph has bridges: {sorted(found)}")
    if nx.has_bridges(to_networkx(g)):
        raise VizingDiagnosticError("bridge search disagrees with networkx", {"graph_n": g.n})


def three_colorable_signature(
    g: SignedGraph, *, max_vertices: int = MATCHING_MAX_VERTICES
) -> SignatureWitness:
    """Signature with chi' = 3: a perfect matching negative, every other edge positive.

    The witness colors every circle of the 2-factor 1 at v_i and -1 at v_{i+1} and the
    matching 0.
    """
    check_cubic_bridgeless(g)
    matching = perfect_matching(g, max_vertices=max_vertices)
    if matching is None:
        raise VizingDiagnosticError("no perfect matching in a cubic bridgeless graph",
                                    {"vertices": g.n, "edges": g.m})
    in_matching = set(matching)
    signed = with_signs(g, [NEGATIVE if e.id in in_matching else POSITIVE for e in g.edges])

    ends: dict[int, tuple[int, int]] = {eid: (0, 0) for eid in matching}
    factor = [e for e in signed.edges if e.id not in in_matching]
    adj: dict[int, list] = {v: [] for v in signed.vertices}
    for e in factor:
        adj[e.u].append(e)
        adj[e.v].append(e)
    done: set[int] = set()
    for comp in components(SignedGraph(signed.vertices, tuple(factor))):
        cur = comp[0]
        while True:
            nxt = next((e for e in sorted(adj[cur], key=lambda f: f.id) if e.id not in done), None)
            if nxt is None:
                break
            done.add(nxt.id)
            ends[nxt.id] = (1, -1) if nxt.u == cur else (-1, 1)
            cur = nxt.other(cur)
    coloring = EdgeColoring(signed, 3, tuple(ends[e.id] for e in signed.edges))
    logger.debug("3-colorable signature: %d matching edges", len(matching))
    return SignatureWitness(signed, matching, coloring)
