"""Breadth-first layering of a topology around its source.

Layer i holds the nodes at hop distance exactly i from the source. The layer
count (depth of the shortest-path tree) is a lower bound on the latency of
any broadcast schedule: the message crosses at most one layer per slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .topology import Topology


@dataclass(frozen=True)
class LayeredDecomposition:
    """BFS layers, shortest-path-tree parents, and per-channel layer slices.

    Attributes:
        depth: index of the last non-empty layer (0 for a lone source).
        layers: layers[i] is the sorted tuple of nodes at hop distance i.
        layer_of: node -> layer index, reachable nodes only.
        spt_parent: node -> its lowest-id neighbor in the previous layer,
            defined for every reachable node except the source.
        slices: (layer, channel) -> sorted tuple of that layer's nodes
            listening on that channel. Empty slices are omitted.
        unreachable: sorted tuple of nodes with no path from the source.
    """

    depth: int
    layers: Tuple[Tuple[int, ...], ...]
    layer_of: Dict[int, int]
    spt_parent: Dict[int, int]
    slices: Dict[Tuple[int, int], Tuple[int, ...]]
    unreachable: Tuple[int, ...]

    def layer(self, i: int) -> Tuple[int, ...]:
        return self.layers[i] if 0 <= i <= self.depth else ()

    def slice(self, i: int, c: int) -> Tuple[int, ...]:
        """Nodes of layer i whose reception channel is c."""
        return self.slices.get((i, c), ())


def build_layers(t: Topology) -> LayeredDecomposition:
    """BFS from the source with lowest-id-first tie-breaking everywhere."""
    layer_of = {t.source: 0}
    layers = [(t.source,)]
    frontier = [t.source]
    while frontier:
        nxt = set()
        for u in frontier:
            for v in t.sorted_neighbors(u):
                if v not in layer_of:
                    nxt.add(v)
        if not nxt:
            break
        ordered = tuple(sorted(nxt))
        depth = len(layers)
        for v in ordered:
            layer_of[v] = depth
        layers.append(ordered)
        frontier = ordered

    spt_parent = {}
    for i in range(1, len(layers)):
        prev = set(layers[i - 1])
        for v in layers[i]:
            spt_parent[v] = min(t.neighbors(v) & prev)

    slices = {}
    for i, members in enumerate(layers):
        for v in members:
            key = (i, t.channel_of(v))
            slices.setdefault(key, []).append(v)
    slices = {key: tuple(vals) for key, vals in slices.items()}

    unreachable = tuple(v for v in range(t.n) if v not in layer_of)
    return LayeredDecomposition(depth=len(layers) - 1,
                                layers=tuple(layers),
                                layer_of=layer_of,
                                spt_parent=spt_parent,
                                slices=slices,
                                unreachable=unreachable)


def lower_bound(d: LayeredDecomposition) -> int:
    """Minimum latency any collision-free broadcast can achieve."""
    return d.depth
