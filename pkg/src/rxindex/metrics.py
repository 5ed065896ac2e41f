"""Steiner distance of vertex triples, Steiner diameter, eccentricities."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from rxindex.errors import InputDomainError
from rxindex.graph import Graph, bfs_distances, distance_matrix


def _check_triple(g: Graph, triple) -> tuple[int, int, int]:
    s = tuple(triple)
    if len(s) != 3 or len(set(s)) != 3:
        raise InputDomainError(f"terminal set must hold 3 distinct vertices, got {triple!r}")
    for v in s:
        if not 0 <= v < g.n:
            raise InputDomainError(f"terminal {v} is not in a graph on {g.n} vertices")
    return s


def steiner_distance3(g: Graph, triple, dist: list[list[int]] | None = None) -> int:
    """Size of a smallest tree containing the three terminals.

    A minimal tree on three terminals is a spider, so its size is the best
    total distance from a single branch vertex to the terminals.
    """
    a, b, c = _check_triple(g, triple)
    if dist is None:
        g.require_connected()
        dist = distance_matrix(g)
    da, db, dc = dist[a], dist[b], dist[c]
    return min(da[m] + db[m] + dc[m] for m in range(g.n))


def steiner_tree3(g: Graph, triple) -> list[tuple[int, int]]:
    """Edge list of one smallest tree containing the three terminals."""
    s = _check_triple(g, triple)
    g.require_connected()
    dist = distance_matrix(g)
    center = min(range(g.n), key=lambda m: sum(dist[t][m] for t in s))
    edges = set()
    for t in s:
        v = t
        while v != center:
            # step to any neighbour one hop closer to the center
            nxt = next(w for w in g.neighbors(v) if dist[center][w] == dist[center][v] - 1)
            edges.add((min(v, nxt), max(v, nxt)))
            v = nxt
    return sorted(edges)


def sdiam3(g: Graph) -> int:
    """Largest Steiner distance over all vertex triples."""
    if g.n < 3:
        raise InputDomainError(f"3-Steiner diameter needs at least 3 vertices, got {g.n}")
    g.require_connected()
    dist = distance_matrix(g)
    best = 0
    for a, b, c in itertools.combinations(range(g.n), 3):
        da, db, dc = dist[a], dist[b], dist[c]
        d = min(da[m] + db[m] + dc[m] for m in range(g.n))
        if d > best:
            best = d
    return best


@dataclass(frozen=True)
class EccentricityReport:
    eccentricities: list[int]
    radius: int
    diameter: int
    central_vertex: int


def ecc_rad_diam(g: Graph) -> EccentricityReport:
    g.require_connected()
    ecc = [max(bfs_distances(g, v)) for v in range(g.n)]
    radius = min(ecc)
    return EccentricityReport(ecc, radius, max(ecc), ecc.index(radius))
