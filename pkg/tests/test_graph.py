import math
import random

from hypothesis import given, strategies as st
import pytest

from oddhom.errors import AdjacentIdentification, PreconditionViolated
from oddhom.graph import (
    INF, Graph, bfs_distances, diameter, distance, eccentricity, equal_distance_pair,
    is_bipartite, radius, shortest_odd_cycle,
)

from strategies import connected_graphs, graphs


def odd_girth_by_walks(g):
    # smallest odd L with a closed walk of length L: trace of A^L
    verts = sorted(g.adj)
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    a = [[0] * n for _ in range(n)]
    for u, v in g.edges():
        a[idx[u]][idx[v]] = a[idx[v]][idx[u]] = 1
    power = [row[:] for row in a]
    for length in range(1, 2 * n + 2):
        if length % 2 == 1 and any(power[i][i] for i in range(n)):
            return length
        power = [[min(1, sum(power[i][t] * a[t][j] for t in range(n))) for j in range(n)] for i in range(n)]
    return None


def test_bfs_path_from_endpoint():
    d = bfs_distances(Graph.path(3), 0)
    assert [d[v] for v in range(3)] == [0, 1, 2]


def test_bfs_c5_distance_multiset():
    for s in range(5):
        assert sorted(bfs_distances(Graph.cycle(5), s).values()) == [0, 1, 1, 2, 2]


def test_bfs_unreachable_marker():
    g = Graph(4, [(0, 1), (2, 3)])
    d = bfs_distances(g, 0)
    assert d[2] == INF and d[3] == INF
    assert distance(g, 0, 3) == INF


def test_diameter_radius_small():
    assert (diameter(Graph.cycle(5)), radius(Graph.cycle(5))) == (2, 2)
    assert (diameter(Graph(1)), radius(Graph(1))) == (0, 0)
    assert diameter(Graph.petersen()) == 2
    assert diameter(Graph.grotzsch()) == 2
    assert diameter(Graph(2)) == math.inf


def test_eccentricity_path():
    g = Graph.path(5)
    assert [eccentricity(g, v) for v in range(5)] == [4, 3, 2, 3, 4]


def test_shortest_odd_cycle_examples():
    assert shortest_odd_cycle(Graph.cycle(5)) == 5
    assert shortest_odd_cycle(Graph.cycle(6)) is None
    assert shortest_odd_cycle(Graph.path(4)) is None
    assert shortest_odd_cycle(Graph.cycle(5).with_edge(0, 2)) == 3
    assert shortest_odd_cycle(Graph.petersen()) == 5
    assert shortest_odd_cycle(Graph.grotzsch()) == 5


def test_equal_distance_pair_examples():
    tri = Graph(4, [(0, 1), (1, 2), (2, 0), (3, 0)])
    assert equal_distance_pair(tri, [0, 1, 2], 3) == 1
    g = Graph(6, [(i, (i + 1) % 5) for i in range(5)] + [(5, 0), (5, 1)])
    assert equal_distance_pair(g, [0, 1, 2, 3, 4], 5) == 0
    # pendant path v-u-c0 on C5: distances 2,3,4,4,3 around the cycle
    g = Graph(7, [(i, (i + 1) % 5) for i in range(5)] + [(5, 0), (6, 5)])
    assert equal_distance_pair(g, [0, 1, 2, 3, 4], 6) == 2


def test_equal_distance_pair_rejects_bad_input():
    g = Graph.cycle(5)
    with pytest.raises(PreconditionViolated):
        equal_distance_pair(g, [0, 1, 2, 3, 4], 0)
    with pytest.raises(PreconditionViolated):
        equal_distance_pair(Graph.cycle(6).with_edge(0, 3), [0, 1, 2, 3], 4)


def test_identify_path_endpoints():
    g = Graph.path(4)
    h = g.identify(0, 3)
    assert h.n == 3
    # 0 ~ 3 gets neighbors 1 and 2, which are adjacent: a triangle
    assert sorted(h.edges()) == [(0, 1), (0, 2), (1, 2)]
    assert g.n == 4  # original untouched


def test_identify_adjacent_raises():
    with pytest.raises(AdjacentIdentification):
        Graph.path(3).identify(0, 1)


def test_identify_chain_merge_map():
    g = Graph(5, [(0, 1), (2, 3)])
    g = g.identify(3, 4).identify(1, 3).identify(0, 2)
    mm = g.merge_map()
    assert mm[4] == mm[3] == mm[1] == 1
    assert mm[2] == mm[0] == 0
    assert set(mm.values()) == set(g.adj)


def test_self_loop_rejected():
    with pytest.raises(PreconditionViolated):
        Graph(2, [(1, 1)])


@given(graphs(max_n=9), st.data())
def test_bfs_edge_lipschitz(g, data):
    s = data.draw(st.sampled_from(sorted(g.adj)))
    d = bfs_distances(g, s)
    assert d[s] == 0
    for u, v in g.edges():
        if d[u] != INF and d[v] != INF:
            assert abs(d[u] - d[v]) <= 1
        else:
            assert d[u] == d[v] == INF


@given(graphs(max_n=8))
def test_odd_cycle_matches_bipartite_check(g):
    length = shortest_odd_cycle(g)
    assert (length is None) == is_bipartite(g)
    assert length == odd_girth_by_walks(g)


@given(graphs(max_n=9))
def test_adjacency_symmetric_and_loopless(g):
    for u, nb in g.adj.items():
        assert u not in nb
        for w in nb:
            assert u in g.adj[w]


@given(connected_graphs(min_n=2, max_n=9), st.data())
def test_identify_keeps_merge_map_partition(g, data):
    non_edges = [(u, v) for u in g.adj for v in g.adj if u < v and v not in g.adj[u]]
    if not non_edges:
        return
    u, v = data.draw(st.sampled_from(non_edges))
    h = g.identify(u, v)
    mm = h.merge_map()
    assert mm[u] == mm[v] == min(u, v)
    assert set(mm.values()) == set(h.adj)
    assert h.n == g.n - 1


def test_equal_distance_pair_random_triples():
    rng = random.Random(7)
    checked = 0
    while checked < 1000:
        n = rng.randint(6, 14)
        length = rng.choice([3, 5, 7])
        if length >= n:
            continue
        edges = [(i, (i + 1) % length) for i in range(length)]
        for v in range(length, n):
            edges.append((v, rng.randrange(v)))
        for _ in range(rng.randint(0, n)):
            a, b = rng.sample(range(n), 2)
            edges.append((min(a, b), max(a, b)))
        g = Graph(n, set(edges))
        v = rng.randrange(length, n)
        cyc = list(range(length))
        i = equal_distance_pair(g, cyc, v)
        d = bfs_distances(g, v)
        assert d[cyc[i]] == d[cyc[(i + 1) % length]]
        assert all(d[cyc[j]] != d[cyc[(j + 1) % length]] for j in range(i))
        checked += 1
