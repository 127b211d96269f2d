"""Collision-free broadcast scheduling for single-radio multi-channel
unit-disk networks: two schedulers, a physical-replay verifier, and a seeded
experiment harness, served over HTTP with a thin CLI."""

__version__ = "0.1.0"

from .coloring import (Coloring, greedy_distance2_color,
                       maximal_independent_set, scoped_conflicts,
                       smallest_degree_last_order)
from .errors import (CoverageError, InstanceTooLargeError,
                     ScheduleFormatError, TopologyError, VerificationError)
from .layering import LayeredDecomposition, build_layers, lower_bound
from .schedule import Schedule, Transmission, format_schedule, parse_schedule
from .topology import (Topology, build_topology, format_topology,
                       parse_topology, random_topology)

__all__ = [
    "__version__",
    "Coloring", "greedy_distance2_color", "maximal_independent_set",
    "scoped_conflicts", "smallest_degree_last_order",
    "CoverageError", "InstanceTooLargeError", "ScheduleFormatError",
    "TopologyError", "VerificationError",
    "LayeredDecomposition", "build_layers", "lower_bound",
    "Schedule", "Transmission", "format_schedule", "parse_schedule",
    "Topology", "build_topology", "format_topology", "parse_topology",
    "random_topology",
]
