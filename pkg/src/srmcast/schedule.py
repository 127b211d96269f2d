"""Broadcast schedules: ordered transmission instances plus text round-trip.

A schedule is a finite list of (slot, node, channel, intended receivers)
instances. Slots are 1-based; the source is informed at slot 0 by convention.
The horizon is the last used slot. Instances carry their intended receivers so
strict verification can insist each tree-designated reception physically
succeeds; the text form drops receiver sets (they are derivable only with the
generating tree) and keeps the on-air behavior.

The constructor is deliberately permissive: hand-written or corrupted
schedules must remain representable so the verifier can report their
violations instead of refusing to look at them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

from .errors import ScheduleFormatError


@dataclass(frozen=True)
class Transmission:
    """One node transmitting on one channel in one slot."""

    slot: int
    node: int
    channel: int
    receivers: Tuple[int, ...] = ()


class Schedule:
    """Immutable, deterministically ordered transmission schedule."""

    __slots__ = ("transmissions", "horizon", "_by_slot", "_tx_slots", "_intended")

    def __init__(self, transmissions: Iterable[Transmission],
                 horizon: Optional[int] = None):
        txs = []
        for tr in transmissions:
            if tr.slot < 1:
                raise ScheduleFormatError("slot %d below 1" % tr.slot)
            if tr.node < 0 or tr.channel < 1:
                raise ScheduleFormatError("bad instance %r" % (tr,))
            rec = tuple(sorted(tr.receivers))
            txs.append(Transmission(int(tr.slot), int(tr.node),
                                    int(tr.channel), rec))
        txs.sort(key=lambda tr: (tr.slot, tr.node, tr.channel))
        self.transmissions = tuple(txs)
        used = max((tr.slot for tr in txs), default=0)
        if horizon is None:
            horizon = used
        elif horizon < used:
            raise ScheduleFormatError(
                "declared horizon %d below last used slot %d" % (horizon, used))
        self.horizon = int(horizon)

        by_slot: Dict[int, list] = {}
        tx_slots: Dict[Tuple[int, int], list] = {}
        intended: Dict[Tuple[int, int, int], Tuple[int, ...]] = {}
        for tr in txs:
            by_slot.setdefault(tr.slot, []).append(tr)
            tx_slots.setdefault((tr.node, tr.channel), []).append(tr.slot)
            intended[(tr.node, tr.channel, tr.slot)] = tr.receivers
        self._by_slot = {s: tuple(v) for s, v in by_slot.items()}
        self._tx_slots = {key: tuple(v) for key, v in tx_slots.items()}
        self._intended = intended

    def at_slot(self, slot: int) -> Tuple[Transmission, ...]:
        """All instances in a slot, ordered by node then channel."""
        return self._by_slot.get(slot, ())

    def tx_slots(self, node: int, channel: int) -> Tuple[int, ...]:
        """Ascending slots in which `node` transmits on `channel`.

        A node may legitimately transmit more than once on the same channel
        (serving one layer as dominator and the next as connector), hence a
        tuple rather than a single slot.
        """
        return self._tx_slots.get((node, channel), ())

    def intended_receivers(self, node: int, channel: int,
                           slot: int) -> Tuple[int, ...]:
        return self._intended.get((node, channel, slot), ())

    def __len__(self) -> int:
        return len(self.transmissions)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Schedule):
            return NotImplemented
        return (self.horizon == other.horizon
                and self.transmissions == other.transmissions)

    def __repr__(self) -> str:
        return "Schedule(horizon=%d, instances=%d)" % (
            self.horizon, len(self.transmissions))


_HEADER = re.compile(r"^T=(\d+)$")


def format_schedule(s: Schedule) -> str:
    """Text form: `T=<horizon>` header, then `slot node channel` lines
    ascending by slot then node."""
    lines = ["T=%d" % s.horizon]
    for tr in s.transmissions:
        lines.append("%d %d %d" % (tr.slot, tr.node, tr.channel))
    return "\n".join(lines) + "\n"


def parse_schedule(text: str) -> Schedule:
    """Parse the text form. Receiver sets come back empty: the file format
    records on-air behavior only."""
    rows = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not rows:
        raise ScheduleFormatError("empty schedule text")
    m = _HEADER.match(rows[0])
    if not m:
        raise ScheduleFormatError("first line must be T=<horizon>")
    horizon = int(m.group(1))
    txs = []
    for i, row in enumerate(rows[1:], start=1):
        parts = row.split()
        if len(parts) != 3:
            raise ScheduleFormatError("line %d: need 'slot node channel'" % i)
        try:
            slot, node, channel = (int(p) for p in parts)
        except ValueError as exc:
            raise ScheduleFormatError("line %d: %s" % (i, exc)) from None
        if slot < 1:
            raise ScheduleFormatError("line %d: slot %d below 1" % (i, slot))
        txs.append(Transmission(slot, node, channel))
    return Schedule(txs, horizon=horizon)
