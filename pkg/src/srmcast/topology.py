"""Unit disk network model for single-radio multi-channel nodes.

Nodes sit in the plane and share an edge whenever their Euclidean distance is
at most the transmission radius (closed disk, decided on squared distances so
no square roots enter the comparison). Every node listens on one fixed
reception channel out of 1..channel_count; a transmission reaches it only when
sent on that channel.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from .errors import TopologyError


class Topology:
    """Immutable unit disk graph plus per-node reception channels.

    Attributes:
        positions: (n, 2) float array of node coordinates.
        channels: (n,) int array, channels[u] is u's reception channel (1-based).
        channel_count: number of orthogonal channels available.
        radius: transmission radius shared by all nodes.
        source: node id holding the message at slot 0.
    """

    __slots__ = ("positions", "channels", "channel_count", "radius", "source",
                 "_adj", "_nbr_sets", "_nbr_lists")

    def __init__(self, positions, channels, channel_count: int, radius: float,
                 source: int = 0):
        pos = np.array(positions, dtype=np.float64)
        if pos.ndim != 2 or pos.shape[1] != 2 or pos.shape[0] == 0:
            raise TopologyError("positions must be a non-empty (n, 2) array")
        if not np.all(np.isfinite(pos)):
            raise TopologyError("positions must be finite")
        n = pos.shape[0]
        chan = np.array(channels, dtype=np.int64)
        if chan.shape != (n,):
            raise TopologyError("need exactly one channel per node")
        if not isinstance(channel_count, (int, np.integer)) or channel_count < 1:
            raise TopologyError("channel_count must be a positive integer")
        if chan.size and (chan.min() < 1 or chan.max() > channel_count):
            raise TopologyError(
                "channels must lie in 1..%d" % channel_count)
        if not (np.isfinite(radius) and radius > 0):
            raise TopologyError("radius must be positive and finite")
        if not (0 <= source < n):
            raise TopologyError("source %r outside 0..%d" % (source, n - 1))

        self.positions = pos
        self.channels = chan
        self.channel_count = int(channel_count)
        self.radius = float(radius)
        self.source = int(source)

        diff = pos[:, None, :] - pos[None, :, :]
        d2 = np.einsum("ijk,ijk->ij", diff, diff)
        adj = d2 <= self.radius * self.radius
        np.fill_diagonal(adj, False)
        self._adj = adj
        self._nbr_lists = tuple(tuple(np.flatnonzero(adj[u]).tolist())
                                for u in range(n))
        self._nbr_sets = tuple(frozenset(row) for row in self._nbr_lists)
        self.positions.setflags(write=False)
        self.channels.setflags(write=False)
        self._adj.setflags(write=False)

    @property
    def n(self) -> int:
        return self.positions.shape[0]

    def neighbors(self, u: int) -> frozenset:
        """Open neighborhood of u as a set of node ids."""
        return self._nbr_sets[u]

    def sorted_neighbors(self, u: int) -> tuple:
        """Open neighborhood of u in ascending id order."""
        return self._nbr_lists[u]

    def within_two_hops(self, u: int, v: int) -> bool:
        """True when the hop distance between u and v is at most two.

        A node is within two hops of itself; one hop means adjacency; two hops
        means a shared neighbor exists.
        """
        if u == v:
            return True
        if v in self._nbr_sets[u]:
            return True
        a, b = self._nbr_sets[u], self._nbr_sets[v]
        if len(a) > len(b):
            a, b = b, a
        return not a.isdisjoint(b)

    def channel_of(self, u: int) -> int:
        return int(self.channels[u])

    def adjacency_matrix(self) -> np.ndarray:
        """Read-only boolean adjacency matrix."""
        return self._adj

    def reachable(self) -> frozenset:
        """Nodes reachable from the source, source included."""
        seen = {self.source}
        frontier = [self.source]
        while frontier:
            nxt = []
            for u in frontier:
                for v in self._nbr_lists[u]:
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
        return frozenset(seen)

    def is_connected(self) -> bool:
        return len(self.reachable()) == self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Topology):
            return NotImplemented
        return (self.channel_count == other.channel_count
                and self.radius == other.radius
                and self.source == other.source
                and np.array_equal(self.positions, other.positions)
                and np.array_equal(self.channels, other.channels))

    def __repr__(self) -> str:
        return ("Topology(n=%d, channel_count=%d, radius=%g, source=%d)"
                % (self.n, self.channel_count, self.radius, self.source))


def build_topology(points: Sequence, channels: Sequence, channel_count: int,
                   radius: float, source: int = 0) -> Topology:
    """Build a topology from explicit coordinates and channel assignments."""
    return Topology(points, channels, channel_count, radius, source)


def random_topology(n: int, channel_count: int, radius: float, side: float,
                    seed=None, source: int = 0) -> Topology:
    """Sample a topology with uniform positions in a side x side square.

    Channels are uniform over 1..channel_count. Draw order is fixed
    (positions first, then channels) so a given seed always yields the same
    topology. No connectivity guarantee; callers that need a connected
    instance retry with fresh seeds.
    """
    if n < 1:
        raise TopologyError("n must be at least 1")
    if not (np.isfinite(side) and side > 0):
        raise TopologyError("side must be positive and finite")
    rng = np.random.default_rng(seed)
    pos = rng.uniform(0.0, side, size=(n, 2))
    chan = rng.integers(1, channel_count + 1, size=n)
    return Topology(pos, chan, channel_count, radius, source)


def format_topology(t: Topology) -> str:
    """Serialize to text: header `n channel_count radius source`, then one
    `id x y channel` line per node in ascending id order.

    Coordinates use shortest round-trip decimal form, so parsing the output
    reproduces the topology bit for bit.
    """
    lines = ["%d %d %s %d" % (t.n, t.channel_count, repr(t.radius), t.source)]
    for u in range(t.n):
        x, y = t.positions[u]
        lines.append("%d %s %s %d" % (u, repr(float(x)), repr(float(y)),
                                      t.channels[u]))
    return "\n".join(lines) + "\n"


def parse_topology(text: str) -> Topology:
    """Parse the text form produced by format_topology."""
    rows = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not rows:
        raise TopologyError("empty topology text")
    head = rows[0].split()
    if len(head) != 4:
        raise TopologyError("header must be 'n channel_count radius source'")
    try:
        n, channel_count = int(head[0]), int(head[1])
        radius, source = float(head[2]), int(head[3])
    except ValueError as exc:
        raise TopologyError("bad header: %s" % exc) from None
    if len(rows) - 1 != n:
        raise TopologyError("expected %d node lines, found %d"
                            % (n, len(rows) - 1))
    pos = np.empty((n, 2), dtype=np.float64)
    chan = np.empty(n, dtype=np.int64)
    for i, row in enumerate(rows[1:]):
        parts = row.split()
        if len(parts) != 4:
            raise TopologyError("node line %d must be 'id x y channel'" % i)
        try:
            ident = int(parts[0])
            x, y = float(parts[1]), float(parts[2])
            c = int(parts[3])
        except ValueError as exc:
            raise TopologyError("bad node line %d: %s" % (i, exc)) from None
        if ident != i:
            raise TopologyError("node ids must run 0..n-1 in order, got %d "
                                "at position %d" % (ident, i))
        pos[i] = (x, y)
        chan[i] = c
    return Topology(pos, chan, channel_count, radius, source)
