"""Unit disk construction checked against brute-force geometry oracles."""

import numpy as np
import pytest

from srmcast.errors import TopologyError
from srmcast.topology import (Topology, build_topology, format_topology,
                              parse_topology, random_topology)


def brute_adjacency(points, radius):
    """Straight O(n^2) squared-distance comparison, no shortcuts."""
    n = len(points)
    adj = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            dx = points[i][0] - points[j][0]
            dy = points[i][1] - points[j][1]
            adj[i][j] = dx * dx + dy * dy <= radius * radius
    return adj


def union_find_connected(t):
    parent = list(range(t.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(t.n):
        for v in t.neighbors(u):
            parent[find(u)] = find(v)
    return len({find(x) for x in range(t.n)}) == 1


class TestBuild:
    def test_edge_within_radius(self):
        t = build_topology([(0.0, 0.0), (0.5, 0.0)], [1, 1], 1, 1.0)
        assert t.neighbors(0) == {1}
        assert t.neighbors(1) == {0}

    def test_no_edge_beyond_radius(self):
        t = build_topology([(0.0, 0.0), (2.0, 0.0)], [1, 1], 1, 1.0)
        assert t.neighbors(0) == frozenset()

    def test_boundary_distance_is_edge(self):
        """Closed disk: distance exactly equal to the radius connects."""
        t = build_topology([(0.0, 0.0), (1.0, 0.0)], [1, 1], 1, 1.0)
        assert 1 in t.neighbors(0)

    def test_coincident_points_are_adjacent_not_self(self):
        t = build_topology([(3.0, 3.0), (3.0, 3.0)], [1, 1], 1, 1.0)
        assert t.neighbors(0) == {1}
        assert 0 not in t.neighbors(0)

    def test_rejects_bad_channel(self):
        with pytest.raises(TopologyError):
            build_topology([(0, 0), (1, 0)], [1, 3], 2, 1.0)
        with pytest.raises(TopologyError):
            build_topology([(0, 0), (1, 0)], [0, 1], 2, 1.0)

    def test_rejects_bad_source(self):
        with pytest.raises(TopologyError):
            build_topology([(0, 0)], [1], 1, 1.0, source=1)

    def test_rejects_bad_radius(self):
        with pytest.raises(TopologyError):
            build_topology([(0, 0)], [1], 1, 0.0)
        with pytest.raises(TopologyError):
            build_topology([(0, 0)], [1], 1, float("nan"))

    def test_rejects_empty_and_misshapen(self):
        with pytest.raises(TopologyError):
            build_topology([], [], 1, 1.0)
        with pytest.raises(TopologyError):
            build_topology([(0, 0), (1, 0)], [1], 1, 1.0)

    def test_neighbors_match_bruteforce(self):
        for seed in range(5):
            t = random_topology(40, 3, 100.0, 200.0, seed=seed)
            want = brute_adjacency(t.positions.tolist(), t.radius)
            for u in range(t.n):
                assert t.neighbors(u) == {v for v in range(t.n) if want[u][v]}

    def test_adjacency_symmetric_irreflexive(self):
        t = random_topology(60, 2, 100.0, 150.0, seed=11)
        adj = t.adjacency_matrix()
        assert np.array_equal(adj, adj.T)
        assert not adj.diagonal().any()

    def test_sorted_neighbors_ascending(self):
        t = random_topology(30, 2, 100.0, 120.0, seed=3)
        for u in range(t.n):
            row = t.sorted_neighbors(u)
            assert list(row) == sorted(t.neighbors(u))


class TestTwoHop:
    def test_self_and_adjacent(self, path3):
        assert path3.within_two_hops(1, 1)
        assert path3.within_two_hops(0, 1)

    def test_common_neighbor(self, path3):
        assert path3.within_two_hops(0, 2)

    def test_three_hops_is_not(self):
        t = build_topology([(0, 0), (1, 0), (2, 0), (3, 0)], [1] * 4, 1, 1.0)
        assert not t.within_two_hops(0, 3)

    def test_matches_bfs_oracle(self):
        def hop_le2(t, u):
            reach = {u} | set(t.neighbors(u))
            for w in t.neighbors(u):
                reach |= t.neighbors(w)
            return reach

        for seed in (0, 1, 2):
            t = random_topology(35, 2, 100.0, 250.0, seed=seed)
            for u in range(t.n):
                want = hop_le2(t, u)
                got = {v for v in range(t.n) if t.within_two_hops(u, v)}
                assert got == want


class TestRandom:
    def test_same_seed_same_topology(self):
        a = random_topology(50, 4, 100.0, 300.0, seed=42)
        b = random_topology(50, 4, 100.0, 300.0, seed=42)
        assert a == b
        assert format_topology(a) == format_topology(b)

    def test_different_seeds_differ(self):
        a = random_topology(50, 4, 100.0, 300.0, seed=1)
        b = random_topology(50, 4, 100.0, 300.0, seed=2)
        assert a != b

    def test_channels_cover_range_only(self):
        t = random_topology(500, 6, 100.0, 400.0, seed=9)
        assert set(np.unique(t.channels)) <= set(range(1, 7))
        assert t.channels.min() >= 1

    def test_single_node(self):
        t = random_topology(1, 3, 100.0, 50.0, seed=0)
        assert t.n == 1 and t.is_connected()

    def test_connectivity_agrees_with_union_find(self):
        hits = 0
        for seed in range(40):
            t = random_topology(80, 3, 100.0, 300.0, seed=seed)
            assert t.is_connected() == union_find_connected(t)
            hits += t.is_connected()
        # side = 300 with radius 100 keeps most draws connected
        assert hits >= 30

    def test_rejects_bad_args(self):
        with pytest.raises(TopologyError):
            random_topology(0, 1, 100.0, 100.0, seed=0)
        with pytest.raises(TopologyError):
            random_topology(5, 1, 100.0, 0.0, seed=0)


class TestText:
    def test_golden_two_node(self, two_node):
        assert format_topology(two_node) == (
            "2 1 1.0 0\n"
            "0 0.0 0.0 1\n"
            "1 1.0 0.0 1\n")

    def test_round_trip_exact(self):
        t = random_topology(64, 5, 100.0, 333.0, seed=77)
        again = parse_topology(format_topology(t))
        assert again == t
        assert format_topology(again) == format_topology(t)

    def test_parse_rejects_garbage(self):
        with pytest.raises(TopologyError):
            parse_topology("")
        with pytest.raises(TopologyError):
            parse_topology("1 1 1.0\n0 0 0 1\n")
        with pytest.raises(TopologyError):
            parse_topology("2 1 1.0 0\n0 0 0 1\n")
        with pytest.raises(TopologyError):
            parse_topology("1 1 1.0 0\n0 0 zero 1\n")
        with pytest.raises(TopologyError):
            parse_topology("2 1 1.0 0\n0 0 0 1\n5 1 0 1\n")
        with pytest.raises(TopologyError):
            parse_topology("1 2 1.0 0\n0 0 0 9\n")
