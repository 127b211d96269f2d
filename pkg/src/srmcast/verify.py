"""Ground truth: slot-by-slot physical replay and an exhaustive optimum.

The replay makes no assumptions about how a schedule was produced. It walks
the slots, applies the radio model (a node physically receives in a slot iff
exactly one of its neighbors transmits on its reception channel and the node
is not itself transmitting), and reports every violation it sees. Overhearing
counts: any successful reception informs a node, intended or not.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import InstanceTooLargeError
from .schedule import Schedule
from .topology import Topology

VIOLATION_KINDS = (
    "uninformed-transmitter",
    "duplicate-radio",
    "intended-reception-collided",
    "intended-receiver-busy",
    "uncovered-node",
    "malformed-instance",
)

BRUTE_FORCE_MAX_N = 8
BRUTE_FORCE_MAX_CHANNELS = 3


@dataclass(frozen=True)
class Violation:
    slot: int
    kind: str
    detail: str

    def line(self) -> str:
        return "violation %d %s %s" % (self.slot, self.kind, self.detail)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of replaying a schedule against a topology.

    latency is the largest reception time over reachable informed nodes;
    rcv_time maps node -> slot it first got the message (source at 0).
    """

    ok: bool
    strict: bool
    horizon: int
    latency: int
    rcv_time: Dict[int, int]
    violations: Tuple[Violation, ...]

    def render(self) -> str:
        head = "ok" if self.ok else "failed"
        lines = ["%s horizon=%d latency=%d informed=%d"
                 % (head, self.horizon, self.latency, len(self.rcv_time))]
        lines.extend(v.line() for v in self.violations)
        return "\n".join(lines) + "\n"


def replay(t: Topology, s: Schedule, strict: bool = False) -> VerificationReport:
    """Simulate a schedule slot by slot and collect violations.

    Non-strict mode demands a physically lawful broadcast that eventually
    informs every reachable node. Strict mode additionally requires each
    transmission's intended receivers to physically receive that transmission
    alone on their channel, which is what the schedulers promise.
    """
    reachable = t.reachable()
    rcv: Dict[int, int] = {t.source: 0}
    violations: List[Violation] = []

    for slot in range(1, s.horizon + 1):
        valid = []
        for tr in s.at_slot(slot):
            if not 0 <= tr.node < t.n or not 1 <= tr.channel <= t.channel_count:
                violations.append(Violation(
                    slot, "malformed-instance",
                    "node %d channel %d out of range" % (tr.node, tr.channel)))
                continue
            valid.append(tr)

        per_node = Counter(tr.node for tr in valid)
        for node in sorted(per_node):
            if per_node[node] > 1:
                violations.append(Violation(
                    slot, "duplicate-radio",
                    "node %d holds %d simultaneous transmissions"
                    % (node, per_node[node])))
        transmitters = frozenset(per_node)
        for tr in valid:
            if tr.node not in rcv:
                violations.append(Violation(
                    slot, "uninformed-transmitter",
                    "node %d transmits before receiving" % tr.node))

        # Flagged transmitters still occupy the medium below: a schedule that
        # breaks the rules interferes like one that follows them.
        tally: Counter = Counter()
        for tr in valid:
            for x in t.sorted_neighbors(tr.node):
                if t.channel_of(x) == tr.channel:
                    tally[x] += 1
        for x in tally:
            if tally[x] == 1 and x not in transmitters and x not in rcv:
                rcv[x] = slot

        if strict:
            for tr in valid:
                for w in tr.receivers:
                    if not 0 <= w < t.n:
                        violations.append(Violation(
                            slot, "malformed-instance",
                            "intended receiver %d out of range" % w))
                    elif w in transmitters:
                        violations.append(Violation(
                            slot, "intended-receiver-busy",
                            "node %d transmits while meant to hear %d"
                            % (w, tr.node)))
                    elif t.channel_of(w) != tr.channel:
                        violations.append(Violation(
                            slot, "malformed-instance",
                            "receiver %d listens on channel %d, not %d"
                            % (w, t.channel_of(w), tr.channel)))
                    elif w not in t.neighbors(tr.node):
                        violations.append(Violation(
                            slot, "malformed-instance",
                            "receiver %d out of range of node %d"
                            % (w, tr.node)))
                    elif tally[w] != 1:
                        violations.append(Violation(
                            slot, "intended-reception-collided",
                            "receiver %d hears %d same-channel transmitters"
                            % (w, tally[w])))

    for v in sorted(reachable - rcv.keys()):
        violations.append(Violation(s.horizon, "uncovered-node",
                                    "node %d never informed" % v))
    latency = max(rcv[v] for v in reachable if v in rcv)
    return VerificationReport(ok=not violations, strict=strict,
                              horizon=s.horizon, latency=latency,
                              rcv_time=rcv, violations=tuple(violations))


def brute_force_optimal(t: Topology, horizon_cap: int = 32) -> Optional[int]:
    """Minimum number of slots any schedule needs to inform every reachable
    node, by breadth-first search over informed-set states.

    Only transmissions aimed at a channel some uninformed neighbor listens on
    are explored; anything else informs nobody and can only add collisions,
    so dropping it never loses a faster schedule.

    Returns None when no solution exists within horizon_cap slots. Guarded to
    tiny instances; raises InstanceTooLargeError beyond n=8 or 3 channels.
    """
    if t.n > BRUTE_FORCE_MAX_N:
        raise InstanceTooLargeError("n=%d exceeds %d" % (t.n, BRUTE_FORCE_MAX_N))
    if t.channel_count > BRUTE_FORCE_MAX_CHANNELS:
        raise InstanceTooLargeError(
            "channel_count=%d exceeds %d"
            % (t.channel_count, BRUTE_FORCE_MAX_CHANNELS))

    from itertools import product

    n = t.n
    chan = [t.channel_of(v) for v in range(n)]
    nbr_mask = [0] * n
    for v in range(n):
        for w in t.sorted_neighbors(v):
            nbr_mask[v] |= 1 << w
    target = 0
    for v in t.reachable():
        target |= 1 << v
    state = 1 << t.source
    if state == target:
        return 0

    seen = {state}
    frontier = [state]
    for depth in range(1, horizon_cap + 1):
        nxt = []
        for state in frontier:
            informed = [u for u in range(n) if state >> u & 1]
            options = []
            for u in informed:
                useful = sorted({chan[v] for v in range(n)
                                 if nbr_mask[u] >> v & 1 and not state >> v & 1})
                options.append((0,) + tuple(useful))
            for assign in product(*options):
                if not any(assign):
                    continue
                ch_mask = [0] * (t.channel_count + 1)
                for idx, u in enumerate(informed):
                    if assign[idx]:
                        ch_mask[assign[idx]] |= 1 << u
                new = state
                for v in range(n):
                    if state >> v & 1:
                        continue
                    hits = nbr_mask[v] & ch_mask[chan[v]]
                    if hits and hits & (hits - 1) == 0:
                        new |= 1 << v
                if new == target:
                    return depth
                if new != state and new not in seen:
                    seen.add(new)
                    nxt.append(new)
        frontier = nxt
        if not frontier:
            break
    return None
