"""Basic layer-by-layer broadcast scheduler.

Works down the BFS layering one layer at a time. For layer i and channel c,
the slice's dominators (a greedy maximal independent set) must first receive
the message from their shortest-path-tree parents in layer i-1, then hand it
to the rest of the slice:

  step 1: for each channel in turn, distance-2 color the parents within the
      parent+dominator scope and give each parent one slot on channel c;
      advance the clock by that palette before the next channel.
  step 2: distance-2 color each channel's dominators inside their own slice
      (smallest-degree-last order) and let all channels share one slot block;
      advance the clock by the widest palette.

Every transmission names its intended receivers, so pruning can drop
dominator slots that would inform nobody before palettes are sized.
"""

from __future__ import annotations

import logging
from typing import Dict, List

from .coloring import (greedy_distance2_color, maximal_independent_set,
                       scoped_conflicts, smallest_degree_last_order)
from .errors import CoverageError
from .layering import LayeredDecomposition
from .schedule import Schedule, Transmission
from .topology import Topology

logger = logging.getLogger(__name__)

PARENT_PALETTE_NOTE = 4
DOMINATOR_PALETTE_NOTE = 12


def bts_schedule(t: Topology, d: LayeredDecomposition,
                 prune_empty: bool = True) -> Schedule:
    """Schedule a collision-free broadcast, layer by layer.

    Args:
        t: the network.
        d: BFS layering of t (must come from build_layers(t)).
        prune_empty: drop transmissions with no intended receivers before
            coloring, shrinking palettes and the horizon.

    Returns:
        A schedule whose strict replay is collision-free and covers every
        reachable node.
    """
    instances: List[Transmission] = []
    clock = 0
    for i in range(1, d.depth + 1):
        staged = []
        for c in range(1, t.channel_count + 1):
            members = d.slice(i, c)
            if not members:
                continue
            doms = maximal_independent_set(t, members)
            dom_set = frozenset(doms)
            children: Dict[int, List[int]] = {}
            for m in doms:
                children.setdefault(d.spt_parent[m], []).append(m)
            parents = sorted(children)
            coloring = greedy_distance2_color(t, parents,
                                              set(parents) | dom_set)
            if coloring.palette_size > PARENT_PALETTE_NOTE:
                logger.info(
                    "layer %d channel %d: parent coloring used %d colors "
                    "(more than the usual %d)", i, c, coloring.palette_size,
                    PARENT_PALETTE_NOTE)
            for p in parents:
                instances.append(Transmission(clock + coloring.colors[p], p, c,
                                              tuple(sorted(children[p]))))
            clock += coloring.palette_size
            staged.append((c, members, doms, dom_set))

        base = clock
        widest = 0
        for c, members, doms, dom_set in staged:
            claims: Dict[int, List[int]] = {m: [] for m in doms}
            for w in members:
                if w not in dom_set:
                    claims[min(t.neighbors(w) & dom_set)].append(w)
            targets = [m for m in doms if claims[m]] if prune_empty else list(doms)
            order = smallest_degree_last_order(
                scoped_conflicts(t, targets, members))
            coloring = greedy_distance2_color(t, order, members)
            if coloring.palette_size > DOMINATOR_PALETTE_NOTE:
                logger.warning(
                    "layer %d channel %d: dominator coloring used %d colors "
                    "(more than the expected %d)", i, c,
                    coloring.palette_size, DOMINATOR_PALETTE_NOTE)
            for m in order:
                instances.append(Transmission(base + coloring.colors[m], m, c,
                                              tuple(claims[m])))
            widest = max(widest, coloring.palette_size)
        clock = base + widest

    covered = {t.source}
    for tr in instances:
        covered.update(tr.receivers)
    missing = set(d.layer_of) - covered
    if missing:
        raise CoverageError("schedule never covers nodes %s"
                            % sorted(missing))
    return Schedule(instances)


def bts_latency_bound(channel_count: int, depth: int) -> int:
    """Guaranteed horizon ceiling for this scheduler: (4k+12) per layer."""
    return (4 * channel_count + 12) * depth
