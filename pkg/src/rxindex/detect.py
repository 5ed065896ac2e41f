"""Induced subgraphs, cliques, forbidden-pattern recognition and classification."""

from __future__ import annotations

import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from pathlib import Path

from rxindex.errors import CapExceededError, DisconnectedGraphError, InputDomainError
from rxindex.graph import (
    Graph,
    bits,
    canonical_form,
    complete,
    cycle,
    hairy_clique,
    mask_of,
    path,
    read_graph,
    star,
)

PATTERN_CAP = 8


# -- induced subgraph search -------------------------------------------------

def _search_order(h_adj: Sequence[int], first: int | None = None) -> list[int]:
    """Vertex order in which each vertex has as many earlier neighbours as possible."""
    k = len(h_adj)
    if k == 0:
        return []
    if first is None:
        first = max(range(k), key=lambda v: (h_adj[v].bit_count(), -v))
    order = [first]
    placed = 1 << first
    while len(order) < k:
        best = max((v for v in range(k) if not placed >> v & 1),
                   key=lambda v: ((h_adj[v] & placed).bit_count(), h_adj[v].bit_count(), -v))
        order.append(best)
        placed |= 1 << best
    return order


def _embed(g_adj: Sequence[int], h_adj: Sequence[int], anchor: int | None = None) -> list[int] | None:
    """Backtracking search for an induced copy of H in G.

    With ``anchor`` set, only copies using that G-vertex are searched.
    Returns ``phi`` with ``phi[h]`` the image of H-vertex ``h``.
    """
    n, k = len(g_adj), len(h_adj)
    if k > n:
        return None
    if k == 0:
        return []
    g_deg = [a.bit_count() for a in g_adj]
    h_deg = [a.bit_count() for a in h_adj]
    full = (1 << n) - 1
    if anchor is None:
        starts = [(None, _search_order(h_adj))]
    else:
        starts = [(h, _search_order(h_adj, h)) for h in range(k) if g_deg[anchor] >= h_deg[h]]
    for fixed, order in starts:
        phi = [-1] * k
        # earlier[i]: (index j < i, adjacent?) pairs to enforce for order[i]
        earlier = [[(j, bool(h_adj[order[i]] >> order[j] & 1)) for j in range(i)] for i in range(k)]

        def extend(i: int, used: int) -> bool:
            if i == k:
                return True
            h = order[i]
            cand = full & ~used
            for j, adjacent in earlier[i]:
                gv = phi[order[j]]
                cand &= g_adj[gv] if adjacent else ~g_adj[gv]
            if i == 0 and fixed is not None:
                cand &= 1 << anchor
            need = h_deg[h]
            while cand:
                low = cand & -cand
                cand ^= low
                v = low.bit_length() - 1
                if g_deg[v] < need:
                    continue
                phi[h] = v
                if extend(i + 1, used | low):
                    return True
            phi[h] = -1
            return False

        if extend(0, 0):
            return list(phi)
    return None


def is_induced_copy(g: Graph, h: Graph, phi: Sequence[int]) -> bool:
    """True if ``phi`` maps H injectively into G preserving adjacency and non-adjacency."""
    if len(phi) != h.n or len(set(phi)) != h.n:
        return False
    if any(not 0 <= v < g.n for v in phi):
        return False
    for a in range(h.n):
        for b in range(a + 1, h.n):
            if h.has_edge(a, b) != g.has_edge(phi[a], phi[b]):
                return False
    return True


def _star_embedding(g: Graph, h: Graph, r: int) -> list[int] | None:
    hub_h = next(v for v in range(h.n) if h.degree(v) == r)
    leaves_h = [v for v in range(h.n) if v != hub_h]
    for v in range(g.n):
        if g.degree(v) < r:
            continue
        leaves = _first_independent(g.adj, g.adj[v], r)
        if leaves is not None:
            phi = [0] * h.n
            phi[hub_h] = v
            for a, b in zip(leaves_h, leaves):
                phi[a] = b
            return phi
    return None


def _first_independent(adj: Sequence[int], pool: int, size: int) -> list[int] | None:
    chosen: list[int] = []

    def rec(cand: int) -> bool:
        if len(chosen) == size:
            return True
        if len(chosen) + cand.bit_count() < size:
            return False
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            chosen.append(v)
            if rec(cand & ~adj[v]):
                return True
            chosen.pop()
        return False

    return list(chosen) if rec(pool) else None


def _path_order(h: Graph) -> list[int]:
    if h.n == 1:
        return [0]
    start = min(v for v in range(h.n) if h.degree(v) == 1)
    order = [start]
    prev = -1
    while len(order) < h.n:
        nxt = next(w for w in h.neighbors(order[-1]) if w != prev)
        prev = order[-1]
        order.append(nxt)
    return order


def _path_embedding(g: Graph, h: Graph) -> list[int] | None:
    k = h.n
    walk: list[int] = []

    def rec(forbidden: int) -> bool:
        # forbidden: vertices on the walk or adjacent to a walk vertex other than the last
        if len(walk) == k:
            return True
        last = walk[-1]
        cand = g.adj[last] & ~forbidden
        for v in bits(cand):
            walk.append(v)
            if rec(forbidden | (1 << v) | g.adj[last]):
                return True
            walk.pop()
        return False

    for s in range(g.n):
        walk.append(s)
        if rec(1 << s):
            order = _path_order(h)
            phi = [0] * k
            for a, b in zip(order, walk):
                phi[a] = b
            return phi
        walk.pop()
    return None


def contains_induced(g: Graph, h: Graph) -> list[int] | None:
    """An induced embedding of H into G as ``phi[h_vertex] = g_vertex``, or None.

    Stars and paths use dedicated searches; any other pattern goes through
    generic backtracking and must have at most ``PATTERN_CAP`` vertices.
    """
    if h.n > g.n:
        return None
    if h.is_connected():
        pat = recognize_pattern(h)
        if pat.shape == "star" or (pat.shape == "p3"):
            return _star_embedding(g, h, h.n - 1)
        if pat.shape in ("p4", "path"):
            return _path_embedding(g, h)
    if h.n > PATTERN_CAP:
        raise CapExceededError(f"induced-subgraph search is capped at {PATTERN_CAP} pattern vertices, got {h.n}")
    return _embed(g.adj, h.adj)


@dataclass
class FreenessReport:
    """Per-pattern result: ``entries[i] = (free, witness)`` for ``family[i]``."""

    family: list[Graph]
    entries: list[tuple[bool, list[int] | None]] = field(default_factory=list)

    @property
    def free(self) -> bool:
        return all(ok for ok, _ in self.entries)

    def first_violation(self) -> tuple[Graph, list[int]] | None:
        for h, (ok, witness) in zip(self.family, self.entries):
            if not ok:
                return h, witness
        return None


def is_free(g: Graph, family: Sequence[Graph]) -> FreenessReport:
    report = FreenessReport(list(family))
    for h in family:
        phi = contains_induced(g, h)
        report.entries.append((phi is None, phi))
    return report


# -- cliques and independent sets ---------------------------------------------

def _max_clique_mask(adj: Sequence[int], pool: int) -> list[int]:
    """Lexicographically least maximum clique inside ``pool``.

    Depth-first search in increasing vertex order visits cliques in
    lexicographic order, so only strictly larger cliques replace the incumbent.
    """
    best: list[int] = []
    current: list[int] = []

    def expand(cand: int) -> None:
        nonlocal best
        if len(current) > len(best):
            best = list(current)
        while cand:
            if len(current) + cand.bit_count() <= len(best):
                return
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            current.append(v)
            # only larger ids go deeper, each clique is reached once
            expand(cand & adj[v])
            current.pop()

    expand(pool)
    return best


def max_clique(g: Graph) -> list[int]:
    return _max_clique_mask(g.adj, (1 << g.n) - 1)


def max_independent_in(g: Graph, vertices) -> list[int]:
    """Largest independent subset of ``vertices``, lexicographically least among ties."""
    pool = mask_of(vertices)
    if pool >> g.n:
        raise InputDomainError(f"vertex set {sorted(vertices)} is not inside a graph on {g.n} vertices")
    full = (1 << g.n) - 1
    co_adj = [full & ~a & ~(1 << v) for v, a in enumerate(g.adj)]
    return _max_clique_mask(co_adj, pool)


def independence_number_in(g: Graph, vertices) -> int:
    return len(max_independent_in(g, vertices))


# -- pattern recognition -----------------------------------------------------

@dataclass(frozen=True)
class FamilyPattern:
    """Recognised shape of a connected pattern graph.

    ``shape`` is one of ``p3``, ``p4``, ``star``, ``path``, ``other``; ``param``
    is ``r`` for ``star`` (``r >= 3``) and the vertex count for ``path``.
    ``hairy_fragment`` tells whether the graph is an induced subgraph of some
    hairy clique; ``core_size`` is then the clique part used by the witness.
    """

    shape: str
    param: int | None
    hairy_fragment: bool
    core_size: int | None = None

    @property
    def is_star(self) -> bool:
        """Star with at least three leaves, as required by the classifier."""
        return self.shape == "star"

    @property
    def path_length(self) -> int | None:
        if self.shape == "p3":
            return 3
        if self.shape == "p4":
            return 4
        if self.shape == "path":
            return self.param
        return None


def _is_path_graph(h: Graph) -> bool:
    if h.m != h.n - 1 or not h.is_connected():
        return False
    return max(h.degrees(), default=0) <= 2


def _is_star_graph(h: Graph) -> int | None:
    if h.n < 3 or h.m != h.n - 1:
        return None
    degs = sorted(h.degrees())
    if degs[-1] == h.n - 1 and all(d == 1 for d in degs[:-1]):
        return h.n - 1
    return None


def hairy_core(h: Graph) -> list[int] | None:
    """Clique part of a decomposition showing H is an induced subgraph of a hairy clique.

    H (connected) qualifies iff its vertices split into a nonempty clique Q
    and an independent rest whose members each have exactly one neighbour,
    inside Q, with distinct members attached to distinct Q-vertices.  A leaf
    may itself sit in Q (e.g. the far end of ``P3``), which forces |Q| <= 2.
    """
    if h.n == 1:
        return [0]
    deg = h.degrees()
    leaves = [v for v in range(h.n) if deg[v] == 1]
    inner = [v for v in range(h.n) if deg[v] != 1]
    candidates = [inner]
    if len(inner) <= 1:
        candidates += [inner + [leaf] for leaf in leaves]
    for core in candidates:
        if not core:
            continue
        cmask = mask_of(core)
        if any((h.adj[u] | (1 << u)) & cmask != cmask for u in core):
            continue
        attach = set()
        ok = True
        for v in range(h.n):
            if cmask >> v & 1:
                continue
            if deg[v] != 1 or not h.adj[v] & cmask:
                ok = False
                break
            q = h.adj[v].bit_length() - 1
            if q in attach:
                ok = False
                break
            attach.add(q)
        if ok:
            return sorted(core)
    return None


def recognize_pattern(h: Graph) -> FamilyPattern:
    if not h.is_connected():
        raise DisconnectedGraphError("pattern graphs must be connected")
    core = hairy_core(h)
    hairy = core is not None
    csize = len(core) if core is not None else None
    if _is_path_graph(h):
        if h.n == 3:
            return FamilyPattern("p3", 3, hairy, csize)
        if h.n == 4:
            return FamilyPattern("p4", 4, hairy, csize)
        if h.n >= 2:
            return FamilyPattern("path", h.n, hairy, csize)
    r = _is_star_graph(h)
    if r is not None and r >= 3:
        return FamilyPattern("star", r, hairy, csize)
    return FamilyPattern("other", None, hairy, csize)


@dataclass
class Classification:
    """Outcome of the finite-family test.

    ``matched`` names the witnessing subfamily type (``F1``, ``F2``, ``F3``)
    and ``members`` lists indices into the input family.
    """

    bounded: bool
    matched: str | None = None
    members: list[int] = field(default_factory=list)


def classify_family(family: Sequence[Graph]) -> Classification:
    """Whether F-free connected graphs have 3-rainbow index within a constant of
    their 3-Steiner diameter: F must contain ``{P3}``, ``{K1,r, P4}`` (r >= 3) or
    ``{K1,r, Y, Pl}`` with Y an induced subgraph of a hairy clique and l > 4."""
    pats = []
    for i, h in enumerate(family):
        try:
            pats.append(recognize_pattern(h))
        except DisconnectedGraphError:
            raise DisconnectedGraphError(f"family member {i} is not connected") from None
    stars = [i for i, p in enumerate(pats) if p.is_star]
    for i, p in enumerate(pats):
        if p.shape == "p3":
            return Classification(True, "F1", [i])
    p4s = [i for i, p in enumerate(pats) if p.shape == "p4"]
    if stars and p4s:
        return Classification(True, "F2", [stars[0], p4s[0]])
    long_paths = [i for i, p in enumerate(pats) if p.shape == "path" and p.param > 4]
    hairy = [i for i, p in enumerate(pats) if p.hairy_fragment]
    if stars and long_paths and hairy:
        return Classification(True, "F3", [stars[0], hairy[0], long_paths[0]])
    return Classification(False)


# -- pattern mini-language ---------------------------------------------------

_PATTERNS = [
    (re.compile(r"^P(\d+)$"), lambda a: path(int(a[0]))),
    (re.compile(r"^K1,(\d+)$"), lambda a: star(int(a[0]))),
    (re.compile(r"^K(\d+)h$"), lambda a: hairy_clique(int(a[0]))),
    (re.compile(r"^C(\d+)$"), lambda a: cycle(int(a[0]))),
    (re.compile(r"^K(\d+)$"), lambda a: _complete_any(int(a[0]))),
]


def _complete_any(t: int) -> Graph:
    if t < 3:
        return Graph(t, [(0, 1)] if t == 2 else [])
    return complete(t)


def parse_pattern(token: str) -> Graph:
    """``P<l>``, ``K1,<r>``, ``K<s>h``, ``C<n>``, ``K<n>`` or ``@file``."""
    token = token.strip()
    if token.startswith("@"):
        return read_graph(Path(token[1:]))
    for rx, build in _PATTERNS:
        hit = rx.match(token)
        if hit:
            return build(hit.groups())
    raise InputDomainError(f"unrecognised pattern {token!r}")


# -- hereditary enumeration ----------------------------------------------------

def free_graphs(n_max: int, family: Sequence[Graph], labeled: bool = True,
                connected: bool = True) -> Iterator[Graph]:
    """Every F-free graph on ``3..n_max`` vertices, built one vertex at a time.

    Freeness is hereditary, so only graphs whose restriction to the first
    ``k`` vertices is F-free are extended, and each extension is checked only
    for induced copies through the new vertex.  With ``labeled=False`` each
    level is reduced to one graph per isomorphism class.
    """
    if n_max > 7 and labeled:
        raise CapExceededError(f"labelled free-graph enumeration is capped at 7 vertices, got {n_max}")
    pats = [h.adj for h in family]
    level: list[tuple[int, ...]] = [(0,)]
    for k in range(1, n_max + 1):
        if k > 1:
            nxt = []
            seen = set()
            for adj in level:
                for nbrs in range(1 << (k - 1)):
                    grown = list(adj)
                    for v in bits(nbrs):
                        grown[v] |= 1 << (k - 1)
                    grown.append(nbrs)
                    if any(_embed(grown, hp, anchor=k - 1) is not None for hp in pats):
                        continue
                    if not labeled:
                        key = canonical_form(_graph_from_adj(grown))
                        if key in seen:
                            continue
                        seen.add(key)
                    nxt.append(tuple(grown))
            level = nxt
        if k >= 3:
            for adj in level:
                g = _graph_from_adj(adj)
                if not connected or g.is_connected():
                    yield g


def _graph_from_adj(adj: Sequence[int]) -> Graph:
    return Graph(len(adj), [(u, v) for u in range(len(adj)) for v in bits(adj[u]) if u < v])
