import itertools
import json
from collections import deque

import pytest
from hypothesis import given

from rxindex.errors import CapExceededError, InputDomainError
from rxindex.graph import (
    UNREACHABLE,
    Graph,
    NamedFamily,
    bfs_distances,
    build_named,
    canonical_form,
    complete,
    cycle,
    enumerate_connected,
    enumerate_trees,
    from_edge_list,
    hairy_clique,
    induced_subgraph,
    path,
    read_graph,
    star,
    write_graph,
)

from conftest import connected_graphs


def test_hairy_clique_3_counts():
    g = build_named(NamedFamily("hairy_clique", 3))
    assert (g.n, g.m) == (6, 6)


@pytest.mark.parametrize("t", [3, 4, 5, 6])
def test_hairy_clique_shape(t):
    g = hairy_clique(t)
    assert g.n == 2 * t
    assert g.m == t * (t - 1) // 2 + t
    degs = g.degrees()
    assert degs.count(1) == t and degs.count(t) == t
    assert all(g.has_edge(i, t + i) for i in range(t))


def test_star_and_cycle():
    s = star(4)
    assert (s.n, s.m) == (5, 4)
    assert sorted(s.degrees()) == [1, 1, 1, 1, 4]
    c = cycle(4)
    assert (c.n, c.m) == (4, 4)
    assert set(c.degrees()) == {2}
    assert c.is_connected()


@pytest.mark.parametrize("kind,t", [("complete", 2), ("cycle", 2), ("path", 0), ("star", 0),
                                    ("hairy_clique", 2), ("wheel", 5)])
def test_named_family_rejects_bad_params(kind, t):
    with pytest.raises(InputDomainError):
        build_named(kind, t)


def test_from_edge_list():
    assert from_edge_list(3, [(0, 1), (1, 2)]) == path(3)
    assert from_edge_list(3, [(0, 1), (1, 0), (1, 2)]) == path(3)
    with pytest.raises(InputDomainError, match="self-loop"):
        from_edge_list(2, [(0, 0)])
    with pytest.raises(InputDomainError, match=r"\(0, 5\)"):
        from_edge_list(3, [(0, 5)])


def test_graph_is_immutable():
    g = path(3)
    with pytest.raises(AttributeError):
        g.n = 4


def test_induced_subgraph():
    k3, _ = induced_subgraph(complete(4), [0, 2, 3])
    assert k3 == complete(3)
    p3, old = induced_subgraph(cycle(5), [1, 2, 3])
    assert p3 == path(3) and old == [1, 2, 3]
    pend, _ = induced_subgraph(hairy_clique(3), [3, 4, 5])
    assert pend.m == 0 and pend.n == 3
    with pytest.raises(InputDomainError):
        induced_subgraph(path(3), [0, 7])


def test_bfs_examples():
    assert bfs_distances(cycle(6), 0) == [0, 1, 2, 3, 2, 1]
    assert bfs_distances(star(4), 0) == [0, 1, 1, 1, 1]
    assert bfs_distances(path(5), 0) == [0, 1, 2, 3, 4]
    assert bfs_distances(Graph(3, [(0, 1)]), 0) == [0, 1, UNREACHABLE]


@given(connected_graphs(max_n=7))
def test_structure_invariants(g):
    assert sum(g.degrees()) == 2 * g.m
    for u in range(g.n):
        for v in range(g.n):
            assert g.has_edge(u, v) == g.has_edge(v, u)
    for s in range(g.n):
        d = bfs_distances(g, s)
        assert d[s] == 0
        for u, v in g.edges:
            assert abs(d[u] - d[v]) <= 1


def _brute_connected_count(n):
    # BFS connectivity over adjacency lists, independent of the bitset routine
    pairs = list(itertools.combinations(range(n), 2))
    count = 0
    for subset in itertools.product((0, 1), repeat=len(pairs)):
        nbrs = {v: [] for v in range(n)}
        for bit, (u, v) in zip(subset, pairs):
            if bit:
                nbrs[u].append(v)
                nbrs[v].append(u)
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for y in nbrs[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        count += len(seen) == n
    return count


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 1), (3, 4), (4, 38)])
def test_enumerate_connected_counts(n, expected):
    graphs = list(enumerate_connected(n))
    assert len(graphs) == expected == _brute_connected_count(n)
    assert len(set(graphs)) == len(graphs)
    assert all(g.is_connected() and g.n == n for g in graphs)


def test_enumerate_connected_5_matches_bfs_recount():
    assert sum(1 for _ in enumerate_connected(5)) == _brute_connected_count(5) == 728


@pytest.mark.parametrize("n,classes", [(3, 2), (4, 6), (5, 21), (6, 112)])
def test_unique_enumeration_counts(n, classes):
    assert sum(1 for _ in enumerate_connected(n, unique=True)) == classes


def test_enumeration_cap():
    with pytest.raises(CapExceededError):
        next(enumerate_connected(8))


@pytest.mark.parametrize("n,count", [(3, 1), (4, 2), (5, 3), (6, 6), (7, 11)])
def test_tree_classes(n, count):
    trees = list(enumerate_trees(n))
    assert len(trees) == count
    assert all(t.m == n - 1 and t.is_connected() for t in trees)


@given(connected_graphs(max_n=6))
def test_canonical_form_is_relabel_invariant(g):
    perm = list(reversed(range(g.n)))
    assert canonical_form(g) == canonical_form(g.relabel(perm))


def test_canonical_form_separates_classes():
    assert canonical_form(path(4)) != canonical_form(star(3))


def test_file_round_trip(tmp_path):
    g = hairy_clique(4)
    for name in ("g.json", "g.txt"):
        write_graph(g, tmp_path / name)
        assert read_graph(tmp_path / name) == g
    data = json.loads((tmp_path / "g.json").read_text())
    assert data["n"] == 8 and len(data["edges"]) == 10
    text = (tmp_path / "g.txt").read_text().splitlines()
    assert text[0] == "8 10"


@pytest.mark.parametrize("content", ["3 2\n0 1\n", "2 1\n0 0\n", '{"n": 2}', "x y\n", '{"n": 2, "edges": [[0]]}'])
def test_malformed_files(tmp_path, content):
    f = tmp_path / "bad"
    f.write_text(content)
    with pytest.raises(InputDomainError):
        read_graph(f)
