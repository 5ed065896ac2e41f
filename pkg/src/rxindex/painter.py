"""Constructive 3-rainbow colorings for graphs with forbidden induced subgraphs.

``color_p4_star_free`` handles connected (P4, K1,r)-free graphs through a
dominating maximum clique; ``color_layered`` handles (K1,r, Ks^h, Pl)-free
graphs by peeling BFS spheres around a central vertex.
"""

from __future__ import annotations

import functools
import logging
import random
from dataclasses import dataclass, field

from rxindex.detect import contains_induced, max_clique, max_independent_in
from rxindex.errors import CapExceededError, ContractError, InputDomainError, PreconditionError
from rxindex.graph import Graph, bits, complete, hairy_clique, mask_of, path, spheres, star
from rxindex.metrics import ecc_rad_diam
from rxindex.rainbow import EdgeColoring, is_3rainbow
from rxindex.solver import search_fixed_t

log = logging.getLogger(__name__)

COMPLETE_CAP = 12
RANDOM_TRIES = 200


@functools.lru_cache(maxsize=None)
def _complete_colors(n: int, seed: int) -> tuple[int, ...]:
    g = complete(n)
    t = 2 if n <= 5 else 3
    rng = random.Random(seed * 1000 + n)
    for _ in range(RANDOM_TRIES):
        colors = [rng.randint(1, t) for _ in range(g.m)]
        c = EdgeColoring(g, colors)
        if c.t == t and is_3rainbow(g, c):
            return tuple(colors)
    found = search_fixed_t(g, t, budget=None)
    if found is None:
        raise ContractError(f"no {t}-color 3-rainbow coloring of K{n} found")
    return found.colors


def color_complete_small(n: int, seed: int = 0) -> EdgeColoring:
    """A verified 3-rainbow coloring of ``K_n``: 2 colors up to n=5, 3 colors from n=6."""
    if n < 3 or n > COMPLETE_CAP:
        raise CapExceededError(f"complete-graph colorer handles 3 <= n <= {COMPLETE_CAP}, got {n}")
    g = complete(n)
    c = EdgeColoring(g, _complete_colors(n, seed))
    check = is_3rainbow(g, c)
    if not check:
        raise ContractError(f"K{n} coloring fails on triple {check.failing_triple}")
    return c


def _clique_palette(g: Graph, clique: list[int], palette: list[int]) -> dict[tuple[int, int], int]:
    """Color ``G[clique]`` 3-rainbow using colors from ``palette`` (in order)."""
    q = len(clique)
    if q < 2:
        return {}
    if q == 2:
        u, v = clique
        return {(min(u, v), max(u, v)): palette[0]}
    base = color_complete_small(q)
    out = {}
    for (i, j), c in base.items():
        u, v = clique[i], clique[j]
        out[(min(u, v), max(u, v))] = palette[c - 1]
    return out


def _require_free(g: Graph, patterns: list[tuple[str, Graph]]) -> None:
    for name, h in patterns:
        phi = contains_induced(g, h)
        if phi is not None:
            raise PreconditionError(f"input contains an induced {name} on vertices {phi}",
                                    pattern=name, witness=phi)


@dataclass
class SXYPartition:
    S: list[int]
    X: list[int]
    Y: list[int]
    z: int

    @property
    def ell(self) -> int:
        return len(self.X)


@dataclass
class PainterResult:
    coloring: EdgeColoring
    colors_used: int
    partition: SXYPartition | None = None
    per_layer_alphas: list[int] = field(default_factory=list)
    remark_applied: bool = False


def sxy_partition(g: Graph) -> SXYPartition:
    """Maximum clique S, maximum independent X of G - S, the rest Y, and a hub z.

    The clique must dominate the graph and some clique vertex must see all
    of X; both are checked here rather than assumed.
    """
    S = max_clique(g)
    smask = mask_of(S)
    rest = [v for v in range(g.n) if not smask >> v & 1]
    X = max_independent_in(g, rest) if rest else []
    xmask = mask_of(X)
    Y = [v for v in rest if not xmask >> v & 1]
    for v in rest:
        if not g.adj[v] & smask:
            raise ContractError(f"maximum clique {S} does not dominate vertex {v}")
    hubs = [s for s in S if g.adj[s] & xmask == xmask]
    if not hubs:
        raise ContractError(f"no vertex of clique {S} is adjacent to all of {X}")
    for y in Y:
        if not g.adj[y] & xmask:
            raise ContractError(f"vertex {y} outside the clique has no neighbour in {X}")
    return SXYPartition(S, X, Y, hubs[0])


def _p4_star_colors(g: Graph, part: SXYPartition, remark: bool) -> dict[tuple[int, int], int]:
    S, X, Y, z = part.S, part.X, part.Y, part.z
    ell = len(X)
    colors: dict[tuple[int, int], int] = {}

    def put(u, v, c):
        colors[(min(u, v), max(u, v))] = c

    for i, x in enumerate(X, start=1):
        put(z, x, i)
        c = 1 if (remark and ell >= 4 and i == ell) else i + 1
        for y in g.edges_between([x], Y):
            put(*y, c)
    for e in g.edges_between(S, Y):
        put(*e, ell + 2)
    ymask = mask_of(Y)
    for y in Y:
        for w in bits(g.adj[y] & ymask):
            if y < w:
                put(y, w, ell + 3)
    colors.update(_clique_palette(g, S, [ell + 4, ell + 5, ell + 6]))
    for e in g.edges:
        colors.setdefault(e, 1)
    return colors


def color_p4_star_free(g: Graph, r: int, remark: bool = False, verify: bool = True) -> PainterResult:
    """3-rainbow coloring of a connected (P4, K1,r)-free graph with at most ``|X| + 6`` colors.

    With ``remark=True`` and ``|X| >= 4``, the edges from the last X-vertex
    into Y reuse color 1, saving one color; if that coloring fails the
    verifier the plain scheme is returned instead.
    """
    if r < 3:
        raise InputDomainError(f"star parameter r must be >= 3, got {r}")
    if g.n < 3:
        raise InputDomainError(f"need at least 3 vertices, got {g.n}")
    g.require_connected()
    _require_free(g, [("P4", path(4)), (f"K1,{r}", star(r))])
    part = sxy_partition(g)
    if part.ell > r - 1:
        raise ContractError(f"independent set {part.X} has more than r-1 = {r - 1} vertices")
    applied = False
    coloring = None
    if remark and part.ell >= 4:
        candidate = EdgeColoring(g, _p4_star_colors(g, part, True))
        if is_3rainbow(g, candidate):
            coloring, applied = candidate, True
        else:
            log.warning("color-saving variant failed verification; using the plain scheme")
    if coloring is None:
        coloring = EdgeColoring(g, _p4_star_colors(g, part, False))
    if verify:
        check = is_3rainbow(g, coloring)
        if not check:
            raise ContractError(f"coloring fails on triple {check.failing_triple}")
    coloring = coloring.relabeled()
    return PainterResult(coloring, coloring.t, partition=part, remark_applied=applied)


def _layered_colors(g: Graph, center: int, remark: bool) -> tuple[dict, list[int]]:
    layers = spheres(g, center)
    colors: dict[tuple[int, int], int] = {}

    def put(u, v, c):
        colors[(min(u, v), max(u, v))] = c

    prefix = [center]
    k = 0
    alphas = []
    for layer in layers[1:]:
        X = max_independent_in(g, layer)
        xmask = mask_of(X)
        Y = [v for v in layer if not xmask >> v & 1]
        ymask = mask_of(Y)
        a = len(X)
        alphas.append(a)
        for e in g.edges_between(prefix, Y):
            put(*e, k + 1)
        for y in Y:
            for w in bits(g.adj[y] & ymask):
                if y < w:
                    put(y, w, k + 2)
        for j, x in enumerate(X, start=1):
            for e in g.edges_between([x], prefix):
                put(*e, j + k + 2)
            c = k + 3 if (remark and a >= 4 and j == a) else j + k + 3
            for e in g.edges_between([x], Y):
                put(*e, c)
        k += a + 3
        prefix = prefix + layer
    return colors, alphas


def color_layered(g: Graph, r: int, s: int, ell: int, remark: bool = False,
                  verify: bool = True) -> PainterResult:
    """3-rainbow coloring of a connected (K1,r, Ks^h, Pl)-free graph, sphere by sphere.

    Around a central vertex, sphere ``i+1`` is split into a maximum
    independent set X and the rest Y, and its edges to the already colored
    ball get ``|X| + 3`` fresh colors, so the total stays within
    ``sum(alpha_i + 3)`` over the spheres.
    """
    if r < 3 or s < 3 or ell < 5:
        raise InputDomainError(f"need r >= 3, s >= 3, l >= 5; got r={r}, s={s}, l={ell}")
    if g.n < 3:
        raise InputDomainError(f"need at least 3 vertices, got {g.n}")
    g.require_connected()
    _require_free(g, [(f"K1,{r}", star(r)), (f"K{s}h", hairy_clique(s)), (f"P{ell}", path(ell))])
    center = ecc_rad_diam(g).central_vertex
    layers = spheres(g, center)
    for i in range(2, len(layers)):
        prev = mask_of(layers[i - 1])
        for y in layers[i]:
            if not g.adj[y] & prev:
                raise ContractError(f"vertex {y} in sphere {i} has no neighbour in sphere {i - 1}")
    applied = False
    coloring = None
    colors, alphas = _layered_colors(g, center, False)
    if remark and any(a >= 4 for a in alphas):
        saved, _ = _layered_colors(g, center, True)
        candidate = EdgeColoring(g, saved)
        if is_3rainbow(g, candidate):
            coloring, applied = candidate, True
        else:
            log.warning("color-saving variant failed verification; using the plain scheme")
    if coloring is None:
        coloring = EdgeColoring(g, colors)
    if verify:
        check = is_3rainbow(g, coloring)
        if not check:
            raise ContractError(f"layered coloring fails on triple {check.failing_triple}")
    coloring = coloring.relabeled()
    return PainterResult(coloring, coloring.t, per_layer_alphas=alphas, remark_applied=applied)
