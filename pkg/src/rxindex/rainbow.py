"""Edge colorings, rainbow Steiner trees on three terminals, and verification."""

from __future__ import annotations

import itertools
import json
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from pathlib import Path

from rxindex.errors import CapExceededError, InputDomainError
from rxindex.graph import Graph, distance_matrix

ORACLE_EDGE_CAP = 20


class EdgeColoring:
    """Total assignment of a positive color id to every edge of ``host``.

    ``colors[i]`` is the color of ``host.edges[i]``.
    """

    __slots__ = ("host", "colors")

    def __init__(self, host: Graph, colors: Sequence[int] | Mapping[tuple[int, int], int]):
        if isinstance(colors, Mapping):
            lookup = {}
            for (u, v), c in colors.items():
                key = (u, v) if u < v else (v, u)
                if key not in host.edge_index:
                    raise InputDomainError(f"colored pair {(u, v)} is not an edge of the graph")
                if key in lookup and lookup[key] != c:
                    raise InputDomainError(f"edge {key} colored twice")
                lookup[key] = c
            missing = [e for e in host.edges if e not in lookup]
            if missing:
                raise InputDomainError(f"edge {missing[0]} has no color")
            colors = [lookup[e] for e in host.edges]
        colors = tuple(colors)
        if len(colors) != host.m:
            raise InputDomainError(f"expected {host.m} colors, got {len(colors)}")
        for e, c in zip(host.edges, colors):
            if not isinstance(c, int) or isinstance(c, bool) or c < 1:
                raise InputDomainError(f"edge {e} has invalid color {c!r}; colors are positive integers")
        self.host = host
        self.colors = colors

    def __repr__(self):
        return f"EdgeColoring(t={self.t}, colors={dict(self.items())})"

    def __eq__(self, other):
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.host == other.host and self.colors == other.colors

    @property
    def t(self) -> int:
        """Number of distinct colors present."""
        return len(set(self.colors))

    def color(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self.colors[self.host.edge_index[key]]
        except KeyError:
            raise InputDomainError(f"{(u, v)} is not an edge") from None

    def items(self):
        return zip(self.host.edges, self.colors)

    def relabeled(self) -> EdgeColoring:
        """Same partition into color classes, ids compressed to ``1..t`` in order."""
        rank = {c: i + 1 for i, c in enumerate(sorted(set(self.colors)))}
        return EdgeColoring(self.host, [rank[c] for c in self.colors])

    def to_dict(self) -> dict:
        return {"colors": [{"u": u, "v": v, "c": c} for (u, v), c in self.items()]}

    @classmethod
    def from_dict(cls, host: Graph, data: dict) -> EdgeColoring:
        try:
            records = data["colors"]
            pairs = [((r["u"], r["v"]), r["c"]) for r in records]
        except (KeyError, TypeError) as exc:
            raise InputDomainError(f"coloring object needs 'colors' = list of {{u, v, c}}: {exc}") from None
        seen = set()
        for (u, v), _ in pairs:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InputDomainError(f"edge {key} listed twice in coloring")
            seen.add(key)
        return cls(host, dict(pairs))


def all_distinct(g: Graph) -> EdgeColoring:
    return EdgeColoring(g, range(1, g.m + 1))


def read_coloring(host: Graph, path: str | Path) -> EdgeColoring:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InputDomainError(f"{path}: invalid JSON: {exc}") from None
    return EdgeColoring.from_dict(host, data)


def write_coloring(coloring: EdgeColoring, path: str | Path) -> None:
    Path(path).write_text(json.dumps(coloring.to_dict()) + "\n")


@dataclass(frozen=True)
class TreeCertificate:
    edges: tuple[tuple[int, int], ...]
    terminals: tuple[int, int, int]

    def check(self, coloring: EdgeColoring) -> bool:
        """Independent revalidation: a rainbow tree of the host covering the terminals."""
        g = coloring.host
        if not self.edges:
            return False
        parent = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        colors = set()
        for u, v in self.edges:
            if not g.has_edge(u, v):
                return False
            c = coloring.color(u, v)
            if c in colors:
                return False
            colors.add(c)
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        if any(t not in parent for t in self.terminals):
            return False
        return len({find(x) for x in parent}) == 1


# -- spider search -----------------------------------------------------------

def edge_id_matrix(g: Graph, order: Sequence[tuple[int, int]] | None = None) -> list[list[int]]:
    """``eid[u][v]`` = position of edge ``uv`` in ``order`` (default ``g.edges``), -1 if absent."""
    eid = [[-1] * g.n for _ in range(g.n)]
    for i, (u, v) in enumerate(order if order is not None else g.edges):
        eid[u][v] = eid[v][u] = i
    return eid


def spider_search(adj: Sequence[int], eid, col: Sequence[int], dist, terminals, limit: int) -> int | None:
    """Bitmask of edge ids forming a tree on the terminals, or None.

    ``col[e] == 0`` marks an uncolored edge.  The tree may use at most
    ``limit`` edges and its colored edges must carry pairwise distinct
    colors.  Every minimal tree on three terminals is a spider: a branch
    vertex plus up to three internally disjoint legs ending at the
    terminals (a leg is empty when the branch vertex is itself a
    terminal), and that is exactly the space searched.
    """
    a, b, c = terminals
    n = len(adj)
    term_mask = (1 << a) | (1 << b) | (1 << c)
    da, db, dc = dist[a], dist[b], dist[c]
    centers = sorted(range(n), key=lambda m: da[m] + db[m] + dc[m])
    for m in centers:
        if da[m] + db[m] + dc[m] > limit:
            break
        targets = [x for x in terminals if x != m]
        # cheaper legs first
        targets.sort(key=lambda x: dist[x][m])
        nt = len(targets)
        tail = [0] * (nt + 1)
        for i in range(nt - 1, -1, -1):
            tail[i] = tail[i + 1] + dist[targets[i]][m]
        found = _legs(adj, eid, col, dist, m, targets, tail, term_mask, limit,
                      0, m, (1 << m), 0, 0, 0)
        if found is not None:
            return found
    return None


def _legs(adj, eid, col, dist, m, targets, tail, term_mask, limit,
          li, v, used, cmask, size, emask):
    if li == len(targets):
        return emask
    target = targets[li]
    if v == target:
        return _legs(adj, eid, col, dist, m, targets, tail, term_mask, limit,
                     li + 1, m, used, cmask, size, emask)
    dt = dist[target]
    rest = tail[li + 1]
    # interior leg vertices avoid every terminal except this leg's end
    cand = adj[v] & ~used & ~(term_mask & ~(1 << target))
    while cand:
        low = cand & -cand
        cand ^= low
        w = low.bit_length() - 1
        if size + 1 + dt[w] + rest > limit:
            continue
        e = eid[v][w]
        c = col[e]
        if c:
            bit = 1 << c
            if cmask & bit:
                continue
            nmask = cmask | bit
        else:
            nmask = cmask
        found = _legs(adj, eid, col, dist, m, targets, tail, term_mask, limit,
                      li, w, used | low, nmask, size + 1, emask | (1 << e))
        if found is not None:
            return found
    return None


def _check_terminals(g: Graph, triple) -> tuple[int, int, int]:
    s = tuple(triple)
    if len(s) != 3 or len(set(s)) != 3 or any(not 0 <= v < g.n for v in s):
        raise InputDomainError(f"terminal set must be 3 distinct vertices of the graph, got {triple!r}")
    return s


def _check_coloring(g: Graph, c: EdgeColoring) -> None:
    if c.host != g:
        raise InputDomainError("coloring was built for a different graph")


def find_rainbow_tree(g: Graph, c: EdgeColoring, triple) -> TreeCertificate | None:
    s = _check_terminals(g, triple)
    _check_coloring(g, c)
    g.require_connected()
    found = spider_search(g.adj, edge_id_matrix(g), c.colors, distance_matrix(g), s, c.t)
    if found is None:
        return None
    edges = tuple(e for i, e in enumerate(g.edges) if found >> i & 1)
    return TreeCertificate(edges, s)


@dataclass(frozen=True)
class RainbowCheck:
    valid: bool
    failing_triple: tuple[int, int, int] | None = None

    def __bool__(self):
        return self.valid


def is_3rainbow(g: Graph, c: EdgeColoring) -> RainbowCheck:
    """Check every vertex triple, in lexicographic order, for a rainbow tree."""
    if g.n < 3:
        raise InputDomainError(f"3-rainbow check needs at least 3 vertices, got {g.n}")
    _check_coloring(g, c)
    g.require_connected()
    eid = edge_id_matrix(g)
    dist = distance_matrix(g)
    limit = c.t
    for s in itertools.combinations(range(g.n), 3):
        if spider_search(g.adj, eid, c.colors, dist, s, limit) is None:
            return RainbowCheck(False, s)
    return RainbowCheck(True)


# -- brute-force oracle --------------------------------------------------------

def oracle_rainbow_tree_exists(g: Graph, c: EdgeColoring, triple) -> bool:
    """Exhaustive check over every edge set with pairwise distinct colors.

    Rainbow edge sets pick at most one edge from each color class; each is
    tested with union-find for being a single tree that touches all three
    terminals.
    """
    s = _check_terminals(g, triple)
    _check_coloring(g, c)
    if g.m > ORACLE_EDGE_CAP:
        raise CapExceededError(f"oracle handles at most {ORACLE_EDGE_CAP} edges, got {g.m}")
    classes: dict[int, list[tuple[int, int]]] = {}
    for e, col in c.items():
        classes.setdefault(col, []).append(e)
    choices = [[None] + members for members in classes.values()]
    for pick in itertools.product(*choices):
        chosen = [e for e in pick if e is not None]
        if len(chosen) < 2:
            continue
        if _is_tree_covering(chosen, s):
            return True
    return False


def _is_tree_covering(edges, terminals) -> bool:
    parent: dict[int, int] = {}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        return root

    for u, v in edges:
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    if len(edges) != len(parent) - 1:
        return False
    return all(t in parent for t in terminals)
