"""Hand-built fixtures shared across the suite.

Coordinates are chosen so every intended adjacency is comfortably inside or
outside the radius (or exactly on it where the boundary itself is the point
under test); all are verified in test_topology.
"""

import pytest

from srmcast.topology import build_topology


@pytest.fixture
def two_node():
    """s(0) adjacent to w(1), one channel."""
    return build_topology([(0.0, 0.0), (1.0, 0.0)], [1, 1], 1, 1.0)


@pytest.fixture
def path3():
    """s(0) - a(1) - b(2) in a line, one channel."""
    return build_topology([(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)], [1, 1, 1],
                          1, 1.0)


@pytest.fixture
def two_leaf_two_channel():
    """s(0) with leaves 1 (channel 1) and 2 (channel 2) out of mutual range."""
    return build_topology([(0.0, 0.0), (1.0, 0.0), (-1.0, 0.0)], [1, 1, 2],
                          2, 1.0)


@pytest.fixture
def clique_leaves():
    """s(0) plus three mutually adjacent leaves 1, 2, 3, one channel."""
    return build_topology(
        [(0.0, 0.0), (0.8, 0.0), (0.8, 0.3), (0.8, -0.3)],
        [1, 1, 1, 1], 1, 1.0)


@pytest.fixture
def crossfire():
    """Two layer-1 dominators (1 and 2) with a shared layer-2 listener (4).

    Adjacency: 0-1, 0-2, 0-3, 2-3, 1-4, 2-4. Any schedule that lets 1 and 2
    transmit in the same slot on channel 1 collides at node 4, so this is the
    regression fixture for receiver-protected slot assignment.
    """
    return build_topology(
        [(0.0, 0.0), (0.8, 0.55), (0.8, -0.55), (0.55, -0.8), (1.35, 0.0)],
        [1, 1, 1, 1, 1], 1, 1.0)


@pytest.fixture
def dual_role_line():
    """s(0), a(1), b(2) in layer 1 (a-b adjacent), v(3) behind a.

    Node 1 ends up transmitting twice on channel 1: once as the layer-1
    relay for 2, once as the parent of layer-2 node 3.
    """
    return build_topology(
        [(0.0, 0.0), (1.0, 0.0), (0.7, 0.7), (2.0, 0.0)],
        [1, 1, 1, 1], 1, 1.0)
