"""Exact 3-rainbow index by exhaustive search over color-class partitions."""

from __future__ import annotations

import itertools
import time
from collections.abc import Iterator
from dataclasses import dataclass

from rxindex.errors import BudgetExceededError, InputDomainError
from rxindex.graph import Graph, bfs_distances, distance_matrix
from rxindex.metrics import sdiam3
from rxindex.rainbow import EdgeColoring, edge_id_matrix, spider_search

DEFAULT_BUDGET = 60.0


@dataclass(frozen=True)
class Rx3Bounds:
    lower: int
    upper: int


@dataclass(frozen=True)
class Rx3Result:
    value: int
    witness: EdgeColoring
    exhausted: bool = True


def rx3_bounds(g: Graph) -> Rx3Bounds:
    """``max(2, sdiam3) <= rx3 <= n - 1``."""
    return Rx3Bounds(max(2, sdiam3(g)), g.n - 1)


def canonical_colorings(m: int, t: int) -> Iterator[tuple[int, ...]]:
    """Restricted-growth strings of length ``m`` using exactly the colors ``1..t``.

    Each partition of ``m`` edges into ``t`` nonempty color classes appears once.
    """
    if t < 1 or t > m:
        return
    seq = [0] * m

    def rec(i: int, top: int):
        if i == m:
            if top == t:
                yield tuple(seq)
            return
        for c in range(1, min(top + 1, t) + 1):
            if m - i - 1 < t - max(top, c):
                continue
            seq[i] = c
            yield from rec(i + 1, max(top, c))

    yield from rec(0, 0)


def spanning_tree_coloring(g: Graph) -> EdgeColoring:
    """BFS tree edges get colors ``1..n-1``, every other edge color 1."""
    dist = bfs_distances(g, 0)
    colors = {}
    nxt = 1
    for v in sorted(range(1, g.n), key=lambda x: (dist[x], x)):
        p = next(u for u in g.neighbors(v) if dist[u] == dist[v] - 1)
        colors[(min(p, v), max(p, v))] = nxt
        nxt += 1
    for e in g.edges:
        colors.setdefault(e, 1)
    return EdgeColoring(g, colors)


class _Timer:
    __slots__ = ("deadline",)

    def __init__(self, budget):
        self.deadline = None if budget is None else time.monotonic() + budget

    def tick(self) -> bool:
        return self.deadline is not None and time.monotonic() > self.deadline


class _Timeout(Exception):
    pass


def search_fixed_t(g: Graph, t: int, budget: float | None = None) -> EdgeColoring | None:
    """A 3-rainbow coloring of ``g`` with exactly ``t`` colors, or None if none exists.

    Edges are colored in restricted-growth order.  Every vertex triple keeps
    a witness tree whose colored edges are distinct and whose size is at
    most ``t``; such a tree is a necessary condition for the triple to be
    served by some completion of the partial coloring.  Coloring an edge only
    invalidates witnesses through that edge, and a witness stays valid when
    edges are uncolored on backtrack, so witnesses are never restored.

    Raises ``_Timeout`` when ``budget`` seconds elapse.
    """
    m = g.m
    if t > m or t < 1:
        return None
    order = sorted(g.edges, key=lambda e: (e[1], e[0]))
    eid = edge_id_matrix(g, order)
    dist = distance_matrix(g)
    adj = g.adj
    triples = list(itertools.combinations(range(g.n), 3))
    col = [0] * m
    witness = []
    for s in triples:
        w = spider_search(adj, eid, col, dist, s, t)
        if w is None:
            return None
        witness.append(w)
    timer = _Timer(budget)
    nt = len(triples)

    def still_rainbow(w: int, p: int, c: int) -> bool:
        w &= ~(1 << p)
        while w:
            low = w & -w
            w ^= low
            if col[low.bit_length() - 1] == c:
                return False
        return True

    def rec(p: int, top: int) -> bool:
        if p == m:
            return True
        if timer.tick():
            raise _Timeout
        bit = 1 << p
        for c in range(1, min(top + 1, t) + 1):
            newtop = top if top > c else c
            if m - p - 1 < t - newtop:
                continue
            col[p] = c
            ok = True
            for i in range(nt):
                w = witness[i]
                if w & bit and not still_rainbow(w, p, c):
                    w = spider_search(adj, eid, col, dist, triples[i], t)
                    if w is None:
                        ok = False
                        break
                    witness[i] = w
            if ok and rec(p + 1, newtop):
                return True
            col[p] = 0
        return False

    if not rec(0, 0):
        return None
    by_edge = {e: col[i] for i, e in enumerate(order)}
    return EdgeColoring(g, by_edge)


def rx3_exact(g: Graph, budget: float | None = DEFAULT_BUDGET) -> Rx3Result:
    """Least number of colors in a 3-rainbow coloring, with a witness coloring.

    Colour counts are tried upward from the Steiner-diameter lower bound;
    the first count that admits a coloring is the answer.  On timeout a
    ``BudgetExceededError`` carries the bracket established so far.
    """
    if g.n < 3:
        raise InputDomainError(f"3-rainbow index needs at least 3 vertices, got {g.n}")
    bounds = rx3_bounds(g)
    start = time.monotonic()
    for t in range(bounds.lower, bounds.upper + 1):
        remaining = None if budget is None else budget - (time.monotonic() - start)
        try:
            if remaining is not None and remaining <= 0:
                raise _Timeout
            found = search_fixed_t(g, t, remaining)
        except _Timeout:
            raise BudgetExceededError(
                f"rx3 search exceeded {budget}s budget while trying {t} colors",
                lower=t, upper=bounds.upper, witness=spanning_tree_coloring(g)) from None
        if found is not None:
            return Rx3Result(t, found, True)
    raise AssertionError("no coloring with n-1 colors found; the search is broken")


def rx3_naive(g: Graph) -> int:
    """Same quantity by plain enumeration of canonical colorings; small graphs only."""
    from rxindex.rainbow import is_3rainbow

    bounds = rx3_bounds(g)
    for t in range(bounds.lower, bounds.upper + 1):
        for colors in canonical_colorings(g.m, t):
            if is_3rainbow(g, EdgeColoring(g, colors)):
                return t
    raise AssertionError("unreachable for connected graphs")
