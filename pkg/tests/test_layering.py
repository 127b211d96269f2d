"""BFS layering against an independent queue-based implementation."""

from collections import deque

import pytest

from srmcast.layering import build_layers, lower_bound
from srmcast.topology import build_topology, random_topology


def oracle_distances(t):
    """Plain queue BFS, written separately from the library's."""
    dist = {t.source: 0}
    q = deque([t.source])
    while q:
        u = q.popleft()
        for v in t.neighbors(u):
            if v not in dist:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


class TestSmallShapes:
    def test_single_node(self):
        t = build_topology([(0.0, 0.0)], [1], 1, 1.0)
        d = build_layers(t)
        assert d.depth == 0
        assert d.layers == ((0,),)
        assert lower_bound(d) == 0
        assert d.spt_parent == {}

    def test_star_depth_one(self, clique_leaves):
        d = build_layers(clique_leaves)
        assert d.depth == 1
        assert d.layer(1) == (1, 2, 3)
        assert d.spt_parent == {1: 0, 2: 0, 3: 0}

    def test_path_parents(self, path3):
        d = build_layers(path3)
        assert d.depth == 2
        assert d.layer_of == {0: 0, 1: 1, 2: 2}
        assert d.spt_parent == {1: 0, 2: 1}

    def test_parent_is_lowest_id_tie(self):
        # 1 and 2 both border 3; the lower id must win.
        t = build_topology([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)],
                           [1] * 4, 1, 1.0)
        d = build_layers(t)
        assert d.layer_of[3] == 2
        assert d.spt_parent[3] == 1

    def test_unreachable_nodes_reported(self):
        t = build_topology([(0.0, 0.0), (1.0, 0.0), (9.0, 9.0)], [1] * 3,
                           1, 1.0)
        d = build_layers(t)
        assert d.unreachable == (2,)
        assert 2 not in d.layer_of
        assert d.depth == 1


class TestAgainstOracle:
    def test_layers_match_bfs_distances(self):
        for seed in range(6):
            t = random_topology(45, 3, 100.0, 260.0, seed=seed)
            d = build_layers(t)
            dist = oracle_distances(t)
            assert d.layer_of == dist
            for i, members in enumerate(d.layers):
                assert members == tuple(sorted(v for v in dist
                                               if dist[v] == i))
            assert set(d.unreachable) == set(range(t.n)) - set(dist)

    def test_parent_one_layer_up_and_minimal(self):
        for seed in (3, 8):
            t = random_topology(60, 2, 100.0, 240.0, seed=seed)
            d = build_layers(t)
            for v, p in d.spt_parent.items():
                assert d.layer_of[p] == d.layer_of[v] - 1
                prev = set(d.layer(d.layer_of[v] - 1))
                assert p == min(t.neighbors(v) & prev)

    def test_no_edges_skip_layers(self):
        """Adjacent nodes sit in the same or neighboring layers."""
        t = random_topology(70, 2, 100.0, 280.0, seed=5)
        d = build_layers(t)
        for u in range(t.n):
            if u not in d.layer_of:
                continue
            for v in t.neighbors(u):
                assert abs(d.layer_of[u] - d.layer_of[v]) <= 1


class TestChannelSlices:
    def test_slices_partition_each_layer(self):
        t = random_topology(90, 4, 100.0, 320.0, seed=2)
        d = build_layers(t)
        for i in range(d.depth + 1):
            seen = []
            for c in range(1, t.channel_count + 1):
                part = d.slice(i, c)
                assert all(t.channel_of(v) == c for v in part)
                assert all(d.layer_of[v] == i for v in part)
                seen.extend(part)
            assert sorted(seen) == list(d.layer(i))

    def test_empty_slice_is_empty_tuple(self, two_node):
        d = build_layers(two_node)
        assert d.slice(1, 1) == (1,)
        assert d.slice(2, 1) == ()
        assert d.slice(1, 9) == ()
