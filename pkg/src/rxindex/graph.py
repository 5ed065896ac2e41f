"""Simple undirected graphs on dense vertex ids, named families, enumeration."""

from __future__ import annotations

import itertools
import json
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from pathlib import Path

from rxindex.errors import CapExceededError, DisconnectedGraphError, InputDomainError

UNREACHABLE = -1
ENUMERATION_CAP = 7

FAMILY_KINDS = ("complete", "cycle", "path", "star", "hairy_clique")
_MIN_PARAM = {"complete": 3, "cycle": 3, "path": 1, "star": 1, "hairy_clique": 3}


class Graph:
    """Immutable simple graph with vertices ``0..n-1``.

    Adjacency is kept as one integer bitset per vertex, so ``adj[u] >> v & 1``
    answers an adjacency query and ``adj[u] & adj[v]`` is the common
    neighbourhood.
    """

    __slots__ = ("n", "edges", "adj", "_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise InputDomainError(f"vertex count must be >= 1, got {n}")
        adj = [0] * n
        normalized = set()
        for pair in edges:
            u, v = pair
            if u == v:
                raise InputDomainError(f"self-loop at vertex {u}: pair {tuple(pair)}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputDomainError(f"pair {tuple(pair)} has an endpoint outside 0..{n - 1}")
            if u > v:
                u, v = v, u
            normalized.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_index", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """Map from ``(u, v)`` with ``u < v`` to the position in ``edges``."""
        if self._index is None:
            object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.edges)})
        return self._index

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def is_connected(self) -> bool:
        return component_mask(self, 0) == (1 << self.n) - 1

    def require_connected(self) -> None:
        if not self.is_connected():
            raise DisconnectedGraphError(f"graph on {self.n} vertices is not connected")

    def complement(self) -> Graph:
        return Graph(self.n, [(u, v) for u, v in itertools.combinations(range(self.n), 2)
                              if not self.has_edge(u, v)])

    def relabel(self, perm: list[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def edges_between(self, a: Iterable[int], b: Iterable[int]) -> list[tuple[int, int]]:
        """Edges with one end in ``a`` and the other in ``b`` (sets assumed disjoint)."""
        bmask = mask_of(b)
        out = []
        for u in a:
            for v in bits(self.adj[u] & bmask):
                out.append((u, v) if u < v else (v, u))
        return sorted(out)

    # -- serialization -------------------------------------------------

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: dict) -> Graph:
        try:
            n = data["n"]
            pairs = data["edges"]
        except (KeyError, TypeError) as exc:
            raise InputDomainError(f"graph object needs fields 'n' and 'edges': {exc}") from None
        if not isinstance(n, int) or isinstance(n, bool):
            raise InputDomainError(f"field 'n' must be an integer, got {n!r}")
        checked = []
        for p in pairs:
            if not (isinstance(p, (list, tuple)) and len(p) == 2
                    and all(isinstance(x, int) and not isinstance(x, bool) for x in p)):
                raise InputDomainError(f"edge {p!r} is not a pair of integers")
            checked.append((p[0], p[1]))
        return cls(n, checked)

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Graph:
        rows = [line.split() for line in text.splitlines() if line.strip()]
        if not rows:
            raise InputDomainError("empty graph text")
        try:
            header = [int(x) for x in rows[0]]
            body = [tuple(int(x) for x in r) for r in rows[1:]]
        except ValueError as exc:
            raise InputDomainError(f"non-integer token in graph text: {exc}") from None
        if len(header) != 2:
            raise InputDomainError("first line must be 'n m'")
        n, m = header
        if len(body) != m:
            raise InputDomainError(f"header announces {m} edges, found {len(body)}")
        for r in body:
            if len(r) != 2:
                raise InputDomainError(f"edge line {r} must hold exactly two ids")
        return cls(n, body)


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def component_mask(g: Graph, start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


# -- construction ---------------------------------------------------------

@dataclass(frozen=True)
class NamedFamily:
    kind: str
    t: int

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise InputDomainError(f"unknown family {self.kind!r}; expected one of {FAMILY_KINDS}")
        if not isinstance(self.t, int) or self.t < _MIN_PARAM[self.kind]:
            raise InputDomainError(
                f"family {self.kind} needs t >= {_MIN_PARAM[self.kind]}, got {self.t!r}")


def build_named(family: NamedFamily | str, t: int | None = None) -> Graph:
    """Canonical labelled member of a named family.

    Labelling: ``path`` and ``cycle`` run ``0, 1, ..., t-1`` in order; the star
    hub is ``0``; in ``hairy_clique`` the clique is ``0..t-1`` and the pendant
    of ``i`` is ``t + i``.
    """
    if not isinstance(family, NamedFamily):
        family = NamedFamily(family, t)
    kind, t = family.kind, family.t
    if kind == "complete":
        return Graph(t, itertools.combinations(range(t), 2))
    if kind == "cycle":
        return Graph(t, [(i, (i + 1) % t) for i in range(t)])
    if kind == "path":
        return Graph(t, [(i, i + 1) for i in range(t - 1)])
    if kind == "star":
        return Graph(t + 1, [(0, i) for i in range(1, t + 1)])
    clique = list(itertools.combinations(range(t), 2))
    return Graph(2 * t, clique + [(i, t + i) for i in range(t)])


def complete(t: int) -> Graph:
    return build_named("complete", t)


def cycle(t: int) -> Graph:
    return build_named("cycle", t)


def path(t: int) -> Graph:
    return build_named("path", t)


def star(t: int) -> Graph:
    return build_named("star", t)


def hairy_clique(t: int) -> Graph:
    return build_named("hairy_clique", t)


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, pairs)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """``G[A]`` relabelled to ``0..|A|-1``; second item maps new ids to old ids."""
    old = sorted(set(vertices))
    for v in old:
        if not 0 <= v < g.n:
            raise InputDomainError(f"vertex {v} is not in a graph on {g.n} vertices")
    if not old:
        raise InputDomainError("induced subgraph on an empty vertex set")
    new = {v: i for i, v in enumerate(old)}
    amask = mask_of(old)
    pairs = [(new[u], new[v]) for u in old for v in bits(g.adj[u] & amask) if u < v]
    return Graph(len(old), pairs), old


def disjoint_union(*graphs: Graph) -> Graph:
    off = 0
    pairs = []
    for g in graphs:
        pairs += [(u + off, v + off) for u, v in g.edges]
        off += g.n
    return Graph(off, pairs)


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts."""
    u = disjoint_union(a, b)
    cross = [(i, a.n + j) for i in range(a.n) for j in range(b.n)]
    return Graph(u.n, list(u.edges) + cross)


# -- traversal ---------------------------------------------------------------

def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get ``UNREACHABLE``."""
    if not 0 <= source < g.n:
        raise InputDomainError(f"vertex {source} is not in a graph on {g.n} vertices")
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in bits(g.adj[u]):
            if dist[v] == UNREACHABLE:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def distance_matrix(g: Graph) -> list[list[int]]:
    return [bfs_distances(g, v) for v in range(g.n)]


def spheres(g: Graph, center: int) -> list[list[int]]:
    """``spheres[i]`` lists the vertices at distance exactly ``i`` from ``center``."""
    dist = bfs_distances(g, center)
    depth = max(dist)
    out: list[list[int]] = [[] for _ in range(depth + 1)]
    for v, d in enumerate(dist):
        if d != UNREACHABLE:
            out[d].append(v)
    return out


# -- enumeration -------------------------------------------------------------

def _all_pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def _refined_cells(g: Graph) -> list[list[int]]:
    """Vertex classes after colour refinement, in an isomorphism-invariant order."""
    color = g.degrees()
    while True:
        sig = [(color[v], tuple(sorted(color[w] for w in g.neighbors(v)))) for v in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(ranks) == len(set(color)):
            color = new
            break
        color = new
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(color[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_form(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Lexicographically least sorted edge list over a canonical set of relabellings.

    Vertices are first split by colour refinement; only orderings that list
    the refined classes in their fixed order are tried, and that set of
    orderings maps onto itself under isomorphism.
    """
    groups = _refined_cells(g)
    best = None
    for combo in itertools.product(*(itertools.permutations(grp) for grp in groups)):
        pos = [0] * g.n
        i = 0
        for grp in combo:
            for v in grp:
                pos[v] = i
                i += 1
        key = tuple(sorted((pos[u], pos[v]) if pos[u] < pos[v] else (pos[v], pos[u])
                           for u, v in g.edges))
        if best is None or key < best:
            best = key
    return g.n, best


def enumerate_connected(n: int, unique: bool = False) -> Iterator[Graph]:
    """Every labelled connected graph on exactly ``n`` vertices.

    With ``unique=True`` one representative per isomorphism class is yielded.
    """
    if n < 1:
        raise InputDomainError(f"n must be >= 1, got {n}")
    if n > ENUMERATION_CAP:
        raise CapExceededError(f"enumeration is capped at n={ENUMERATION_CAP}, got {n}")
    pairs = _all_pairs(n)
    full = (1 << n) - 1
    seen = set()
    for subset in range(1 << len(pairs)):
        adj = [0] * n
        chosen = []
        s = subset
        i = 0
        while s:
            if s & 1:
                u, v = pairs[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                chosen.append(pairs[i])
            s >>= 1
            i += 1
        # bitset reachability from vertex 0
        reach = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~reach
            reach |= frontier
        if reach != full:
            continue
        g = Graph(n, chosen)
        if unique:
            key = canonical_form(g)
            if key in seen:
                continue
            seen.add(key)
        yield g


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on ``n`` vertices."""
    if n == 1:
        yield Graph(1)
        return
    seen = set()
    for prufer in itertools.product(range(n), repeat=max(n - 2, 0)):
        g = _prufer_tree(n, list(prufer))
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            yield g


def _prufer_tree(n: int, seq: list[int]) -> Graph:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    pairs = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        pairs.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    pairs.append((u, v))
    return Graph(n, pairs)


# -- file io -----------------------------------------------------------------

def read_graph(path: str | Path) -> Graph:
    """Read the JSON object format or the ``n m`` edge-list text format."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputDomainError(f"{path}: invalid JSON: {exc}") from None
        return Graph.from_dict(data)
    return Graph.from_text(text)


def write_graph(g: Graph, path: str | Path, fmt: str | None = None) -> None:
    path = Path(path)
    if fmt is None:
        fmt = "json" if path.suffix == ".json" else "text"
    if fmt == "json":
        path.write_text(json.dumps(g.to_dict()) + "\n")
    else:
        path.write_text(g.to_text())
