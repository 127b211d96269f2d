"""Layer-by-layer scheduler: hand-traced fixtures plus replay properties."""

import pytest

from srmcast.bts import bts_latency_bound, bts_schedule
from srmcast.experiment import connected_instance
from srmcast.layering import build_layers
from srmcast.schedule import Transmission
from srmcast.topology import build_topology
from srmcast.verify import replay


def schedule_of(t, prune_empty=True):
    return bts_schedule(t, build_layers(t), prune_empty=prune_empty)


def triples(s):
    return [(tr.slot, tr.node, tr.channel) for tr in s.transmissions]


class TestHandTraces:
    def test_single_node(self):
        t = build_topology([(0.0, 0.0)], [1], 1, 1.0)
        s = schedule_of(t)
        assert s.horizon == 0 and len(s) == 0

    def test_two_node_pruned(self, two_node):
        s = schedule_of(two_node)
        assert s.horizon == 1
        assert s.transmissions == (Transmission(1, 0, 1, (1,)),)

    def test_two_node_unpruned(self, two_node):
        """Without pruning the lone dominator still gets its relay slot."""
        s = schedule_of(two_node, prune_empty=False)
        assert s.horizon == 2
        assert triples(s) == [(1, 0, 1), (2, 1, 1)]
        assert s.intended_receivers(1, 1, 2) == ()

    def test_clique_leaves(self, clique_leaves):
        # Dominator 1 receives from the source at slot 1, relays to 2, 3.
        s = schedule_of(clique_leaves)
        assert triples(s) == [(1, 0, 1), (2, 1, 1)]
        assert s.intended_receivers(0, 1, 1) == (1,)
        assert s.intended_receivers(1, 1, 2) == (2, 3)

    def test_two_channels_serialize_parents(self, two_leaf_two_channel):
        # One radio at the source: channel 1 at slot 1, channel 2 at slot 2.
        s = schedule_of(two_leaf_two_channel)
        assert triples(s) == [(1, 0, 1), (2, 0, 2)]
        assert s.horizon == 2

    def test_same_channel_dual_role(self, dual_role_line):
        """Node 1 relays its own layer and parents the next, both on channel 1."""
        s = schedule_of(dual_role_line)
        assert triples(s) == [(1, 0, 1), (2, 1, 1), (3, 1, 1)]
        assert s.tx_slots(1, 1) == (2, 3)
        rep = replay(dual_role_line, s, strict=True)
        assert rep.ok
        # 3 overhears the slot-2 relay, so physical latency beats the horizon
        assert rep.latency == 2 < s.horizon


class TestProperties:
    CASES = [(40, 1, 0), (60, 2, 1), (80, 3, 2), (120, 4, 3), (90, 2, 4)]

    def fleet(self):
        for n, k, trial in self.CASES:
            t, _, _ = connected_instance(n, k, 100.0, float(n) * 1.4, 99, trial)
            yield t, build_layers(t)

    def test_strict_replay_clean_both_prunes(self):
        for t, d in self.fleet():
            for prune in (True, False):
                s = bts_schedule(t, d, prune_empty=prune)
                rep = replay(t, s, strict=True)
                assert rep.ok, [v.line() for v in rep.violations][:4]

    def test_horizon_bound_both_prunes(self):
        for t, d in self.fleet():
            cap = bts_latency_bound(t.channel_count, d.depth)
            for prune in (True, False):
                assert bts_schedule(t, d, prune_empty=prune).horizon <= cap

    def test_deterministic(self):
        for t, d in self.fleet():
            assert bts_schedule(t, d) == bts_schedule(t, d)

    def test_receivers_listen_on_tx_channel(self):
        for t, d in self.fleet():
            s = bts_schedule(t, d)
            for tr in s.transmissions:
                for w in tr.receivers:
                    assert t.channel_of(w) == tr.channel
                    assert w in t.neighbors(tr.node)

    def test_pruning_only_removes_silent_transmissions(self):
        for t, d in self.fleet():
            pruned = bts_schedule(t, d, prune_empty=True)
            full = bts_schedule(t, d, prune_empty=False)
            kept = {(tr.node, tr.channel, tr.receivers)
                    for tr in pruned.transmissions}
            everything = {(tr.node, tr.channel, tr.receivers)
                          for tr in full.transmissions}
            assert kept <= everything
            assert all(tr.receivers for tr in pruned.transmissions)
            assert pruned.horizon <= full.horizon

    def test_unreachable_nodes_tolerated(self):
        t = build_topology([(0.0, 0.0), (1.0, 0.0), (9.0, 9.0)], [1, 1, 1],
                           1, 1.0)
        s = schedule_of(t)
        rep = replay(t, s, strict=True)
        assert rep.ok
        assert 2 not in rep.rcv_time
