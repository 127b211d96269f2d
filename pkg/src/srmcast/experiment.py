"""Seeded experiment harness: single runs, parameter sweeps, CSV output.

Every trial owns an independent RNG stream: its seed is the first 64-bit word
of numpy's SeedSequence([master_seed, n, k, trial, attempt]), where attempt
counts connectivity retries. The seed lands in the CSV, so any row can be
regenerated standalone. Rows are sorted by (n, k, algo, trial) before
writing; aggregation therefore never depends on execution order.

The `latency` column records the schedule horizon: the slot by which every
reachable node is guaranteed informed. Replay can observe earlier completion
through overhearing; that physical latency lives in verification reports,
not here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .bts import bts_schedule
from .errors import TopologyError, VerificationError
from .ets import INTERFERENCE_MODELS, build_broadcast_tree, ets_schedule
from .layering import LayeredDecomposition, build_layers
from .schedule import Schedule
from .topology import Topology, random_topology
from .verify import VerificationReport, replay

ALGORITHMS = ("bts", "ets")
CSV_COLUMNS = ("seed", "n", "k", "radius", "side", "algo", "depth_l",
               "latency", "ratio", "retries")


@dataclass(frozen=True)
class ExperimentConfig:
    """One sweep: the cross product of n_values x k_values x trials."""

    n_values: Tuple[int, ...]
    k_values: Tuple[int, ...]
    radius: float = 100.0
    area_mode: str = "scaled"
    area_side: Optional[float] = None
    trials: int = 10
    master_seed: int = 0
    algorithms: Tuple[str, ...] = ALGORITHMS
    prune_empty: bool = True
    interference_model: str = "literal"
    strict_verify: bool = True
    max_attempts: int = 50

    def __post_init__(self):
        object.__setattr__(self, "n_values", tuple(int(n) for n in self.n_values))
        object.__setattr__(self, "k_values", tuple(int(k) for k in self.k_values))
        object.__setattr__(self, "algorithms", tuple(self.algorithms))
        if not self.n_values or min(self.n_values) < 1:
            raise ValueError("n_values must be positive and non-empty")
        if not self.k_values or min(self.k_values) < 1:
            raise ValueError("k_values must be positive and non-empty")
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        if self.area_mode not in ("scaled", "fixed"):
            raise ValueError("area_mode must be 'scaled' or 'fixed'")
        if self.area_mode == "fixed" and (
                self.area_side is None or self.area_side <= 0):
            raise ValueError("fixed area mode needs a positive area_side")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.master_seed < 0:
            raise ValueError("master_seed must be non-negative")
        if not self.algorithms or any(a not in ALGORITHMS
                                      for a in self.algorithms):
            raise ValueError("algorithms must be a non-empty subset of %s"
                             % (ALGORITHMS,))
        if self.interference_model not in INTERFERENCE_MODELS:
            raise ValueError("interference_model must be one of %s"
                             % (INTERFERENCE_MODELS,))
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be at least 1")

    def side_for(self, n: int) -> float:
        """Deployment square side: n meters in scaled mode, fixed otherwise."""
        return float(n) if self.area_mode == "scaled" else float(self.area_side)


def trial_seed(master_seed: int, n: int, k: int, trial: int,
               attempt: int = 0) -> int:
    """The documented seed mixing rule. Stable across platforms."""
    ss = np.random.SeedSequence([master_seed, n, k, trial, attempt])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def connected_instance(n: int, k: int, radius: float, side: float,
                       master_seed: int, trial: int,
                       max_attempts: int = 50) -> Tuple[Topology, int, int]:
    """Draw topologies until one is connected.

    Returns (topology, seed actually used, retry count). Raises
    TopologyError when max_attempts draws all come out disconnected.
    """
    for attempt in range(max_attempts):
        seed = trial_seed(master_seed, n, k, trial, attempt)
        t = random_topology(n, k, radius, side, seed)
        if t.is_connected():
            return t, seed, attempt
    raise TopologyError(
        "no connected topology for n=%d k=%d side=%g radius=%g trial=%d "
        "after %d attempts" % (n, k, side, radius, trial, max_attempts))


def build_schedule(t: Topology, d: LayeredDecomposition, algo: str,
                   prune_empty: bool = True,
                   interference_model: str = "literal") -> Schedule:
    if algo == "bts":
        return bts_schedule(t, d, prune_empty=prune_empty)
    if algo == "ets":
        tree = build_broadcast_tree(t, d)
        return ets_schedule(t, d, tree, interference_model=interference_model,
                            prune_empty=prune_empty)
    raise ValueError("unknown algorithm %r" % algo)


def latency_ratio(horizon: int, depth: int) -> float:
    return horizon / depth if depth else float(horizon)


@dataclass(frozen=True)
class RunResult:
    algo: str
    schedule: Schedule
    report: VerificationReport
    depth: int

    @property
    def ratio(self) -> float:
        return latency_ratio(self.schedule.horizon, self.depth)


def run_single(t: Topology, algo: str, prune_empty: bool = True,
               interference_model: str = "literal",
               strict: bool = True) -> RunResult:
    """Schedule one topology with one algorithm and replay the result.

    Never raises on verification failure; the caller inspects report.ok.
    """
    d = build_layers(t)
    s = build_schedule(t, d, algo, prune_empty, interference_model)
    report = replay(t, s, strict=strict)
    return RunResult(algo=algo, schedule=s, report=report, depth=d.depth)


@dataclass(frozen=True)
class SweepResult:
    rows: Tuple[Dict, ...]
    summary: Tuple[Dict, ...]
    csv_text: str


def run_sweep(cfg: ExperimentConfig, out: Optional[str] = None) -> SweepResult:
    """Run the full sweep, strict-verifying every schedule.

    Each (n, k, trial) shares one connected topology across algorithms so
    the comparison is paired. Any verification failure aborts the sweep with
    VerificationError: a schedule that collides is not a data point.
    """
    rows: List[Dict] = []
    for n in sorted(set(cfg.n_values)):
        side = cfg.side_for(n)
        for k in sorted(set(cfg.k_values)):
            for trial in range(cfg.trials):
                t, seed, retries = connected_instance(
                    n, k, cfg.radius, side, cfg.master_seed, trial,
                    cfg.max_attempts)
                d = build_layers(t)
                for algo in cfg.algorithms:
                    s = build_schedule(t, d, algo, cfg.prune_empty,
                                       cfg.interference_model)
                    report = replay(t, s, strict=cfg.strict_verify)
                    if not report.ok:
                        raise VerificationError(
                            "schedule failed verification: n=%d k=%d "
                            "trial=%d seed=%d algo=%s" % (n, k, trial, seed,
                                                          algo),
                            report)
                    rows.append({
                        "seed": seed, "n": n, "k": k, "radius": cfg.radius,
                        "side": side, "algo": algo, "depth_l": d.depth,
                        "latency": s.horizon,
                        "ratio": latency_ratio(s.horizon, d.depth),
                        "retries": retries,
                    })
    # Stable sort: trials stay in 0..trials-1 order inside each cell.
    rows.sort(key=lambda r: (r["n"], r["k"], r["algo"]))
    csv_text = render_csv(rows)
    if out is not None:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(csv_text)
    return SweepResult(rows=tuple(rows), summary=tuple(summarize(rows)),
                       csv_text=csv_text)


def render_csv(rows: Sequence[Dict]) -> str:
    """Fixed column order, fixed number formatting: byte-stable output."""
    lines = [",".join(CSV_COLUMNS)]
    for r in rows:
        lines.append(",".join((
            str(r["seed"]), str(r["n"]), str(r["k"]), repr(float(r["radius"])),
            repr(float(r["side"])), r["algo"], str(r["depth_l"]),
            str(r["latency"]), "%.6f" % r["ratio"], str(r["retries"]))))
    return "\n".join(lines) + "\n"


def summarize(rows: Sequence[Dict]) -> List[Dict]:
    """Per-cell means over trials, one record per (n, k, algo)."""
    cells: Dict[Tuple[int, int, str], List[Dict]] = {}
    for r in rows:
        cells.setdefault((r["n"], r["k"], r["algo"]), []).append(r)
    out = []
    for (n, k, algo) in sorted(cells):
        group = cells[(n, k, algo)]
        mean_latency = float(np.mean([r["latency"] for r in group]))
        mean_depth = float(np.mean([r["depth_l"] for r in group]))
        out.append({
            "n": n, "k": k, "algo": algo, "trials": len(group),
            "mean_latency": mean_latency,
            "mean_depth": mean_depth,
            "mean_ratio": (mean_latency / mean_depth if mean_depth
                           else mean_latency),
        })
    return out
