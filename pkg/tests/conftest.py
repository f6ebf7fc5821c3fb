"""Shared example instances.

`net` is the 6-vertex graph made of a triangle b, c, d with pendant
vertices a (at b), e (at c) and f (at d); it is chordal but not interval,
and with nonprobes {e, f} it is not a probe interval graph although its
probes-by-vertices bigraph is an interval bigraph.  With nonprobes
{b, e, f} it is a probe interval graph.
"""

import pytest

from probeint import build_graph
from probeint.matrices import from_rows, from_zero_one

NET_EDGES = [("a", "b"), ("b", "c"), ("b", "d"), ("c", "d"), ("c", "e"), ("d", "f")]


@pytest.fixture
def net():
    return build_graph(NET_EDGES, nonprobes=["e", "f"])


@pytest.fixture
def net_bef():
    return build_graph(NET_EDGES, nonprobes=["b", "e", "f"])


@pytest.fixture
def c4():
    return build_graph([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])


@pytest.fixture
def c4_probe():
    return build_graph(
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")], nonprobes=["b", "d"]
    )


@pytest.fixture
def k222():
    parts = [["a", "d"], ["b", "c"], ["x", "y"]]
    edges = [
        (u, v)
        for i, pu in enumerate(parts)
        for pv in parts[i + 1 :]
        for u in pu
        for v in pv
    ]
    return build_graph(edges)


@pytest.fixture
def bigraph_a():
    """The 3x5 biadjacency matrix with rows y1..y3 and columns x1..x5."""
    return from_zero_one(
        [
            [1, 1, 1, 0, 0],
            [1, 0, 0, 1, 0],
            [0, 0, 0, 1, 0],
        ],
        rows=("y1", "y2", "y3"),
        cols=("x1", "x2", "x3", "x4", "x5"),
    )


@pytest.fixture
def net_rc_labeling():
    """A hand-checked R-C labeling of the net's probes-by-vertices matrix."""
    return from_rows(
        ["a", "b", "c", "d"],
        ["a", "b", "c", "d", "e", "f"],
        [
            ["1", "1", "R", "R", "R", "R"],
            ["1", "1", "1", "1", "R", "R"],
            ["C", "1", "1", "1", "1", "R"],
            ["C", "1", "1", "1", "C", "1"],
        ],
    )
