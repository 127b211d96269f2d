"""Greedy independent sets and distance-2 colorings on scoped subgraphs.

These are the combinatorial primitives the schedulers share. Distance-2
conflicts are always measured inside an induced scope subgraph, not the full
graph: two targets conflict when their hop distance within G[scope] is at
most two. Paths that leave the scope do not count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Sequence, Set, Tuple

from .topology import Topology


@dataclass(frozen=True)
class Coloring:
    """A proper coloring: node -> positive color, plus the palette size."""

    colors: Dict[int, int]
    palette_size: int


def maximal_independent_set(t: Topology, candidates: Sequence[int]) -> Tuple[int, ...]:
    """Greedy MIS over the candidates, scanned in the order given.

    Independence is with respect to the whole graph; maximality is within the
    candidate set. Returns the chosen nodes in selection order.
    """
    chosen = []
    chosen_set: Set[int] = set()
    for u in candidates:
        if u in chosen_set:
            continue
        if t.neighbors(u).isdisjoint(chosen_set):
            chosen.append(u)
            chosen_set.add(u)
    return tuple(chosen)


def smallest_degree_last_order(conflicts: Mapping[int, Set[int]]) -> list:
    """Classical smallest-degree-last ordering of a conflict graph.

    Repeatedly delete a node of minimum degree in the remaining subgraph
    (ties by lowest id) and output the deletions in reverse. Greedy coloring
    in this order needs at most 1 + inductivity colors.

    Args:
        conflicts: symmetric adjacency map; every value must be a subset of
            the key set.
    """
    alive = set(conflicts)
    deg = {u: len(conflicts[u] & alive) for u in alive}
    removed = []
    while alive:
        u = min(alive, key=lambda v: (deg[v], v))
        alive.remove(u)
        removed.append(u)
        for w in conflicts[u]:
            if w in alive:
                deg[w] -= 1
    removed.reverse()
    return removed


def scoped_conflicts(t: Topology, nodes: Iterable[int],
                     scope: Iterable[int]) -> Dict[int, Set[int]]:
    """Distance-2 conflict adjacency among `nodes` inside G[scope].

    Nodes outside the scope have empty scoped neighborhoods and so conflict
    with nobody.
    """
    scope_set = frozenset(scope)
    ordered = sorted(set(nodes))
    snbrs = {u: (t.neighbors(u) & scope_set if u in scope_set else frozenset())
             for u in ordered}
    conflicts: Dict[int, Set[int]] = {u: set() for u in ordered}
    for i, u in enumerate(ordered):
        nu = snbrs[u]
        for v in ordered[i + 1:]:
            if v in nu or not nu.isdisjoint(snbrs[v]):
                conflicts[u].add(v)
                conflicts[v].add(u)
    return conflicts


def greedy_distance2_color(t: Topology, targets: Sequence[int],
                           scope: Iterable[int]) -> Coloring:
    """Color targets in the order given; conflicting targets get distinct colors.

    Each target takes the smallest positive color not used by an
    already-colored target within scoped distance two of it.
    """
    scope_set = frozenset(scope)
    colors: Dict[int, int] = {}
    for u in targets:
        if u in colors:
            raise ValueError("duplicate target %d" % u)
        reach: Set[int] = set()
        if u in scope_set:
            for w in t.neighbors(u) & scope_set:
                reach.add(w)
                reach |= t.neighbors(w) & scope_set
        forbidden = {colors[x] for x in reach if x in colors}
        c = 1
        while c in forbidden:
            c += 1
        colors[u] = c
    return Coloring(colors=colors, palette_size=max(colors.values(), default=0))
