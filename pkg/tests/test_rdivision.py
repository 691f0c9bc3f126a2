"""Balanced separators and relaxed r-divisions: anchors and invariants."""

import math

import pytest

from trackpaths.generators import grid
from trackpaths.graph import Graph, NotConnectedError, connected_components
from trackpaths.rdivision import balanced_separator, relaxed_r_division


def test_path_separator_is_middle_vertex():
    g = Graph(7, [(i, i + 1) for i in range(6)])
    assert balanced_separator(g) == {3}


def test_c4_separator_is_opposite_pair():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert balanced_separator(g) == {0, 2}


def test_separator_balance_invariant():
    for w, h in [(4, 4), (5, 3), (6, 4)]:
        g = grid(w, h).graph
        sep = balanced_separator(g)
        limit = 2 * g.n / 3
        remaining = Graph(
            g.n, [(u, v) for u, v in g.edges if u not in sep and v not in sep]
        )
        for comp in connected_components(remaining):
            comp = set(comp) - sep
            assert len(comp) <= limit


def test_separator_errors():
    with pytest.raises(ValueError):
        balanced_separator(Graph(1, []))
    with pytest.raises(NotConnectedError):
        balanced_separator(Graph(4, [(0, 1), (2, 3)]))


def test_r_division_invariants():
    for n_side, r in [(6, 9), (8, 16), (10, 25)]:
        g = grid(n_side, n_side).graph
        div = relaxed_r_division(g, r)
        assert div.r == r
        covered = set()
        for region in div.regions:
            assert len(region.vertices) <= r
            assert region.boundary <= region.vertices
            for u, v in region.edges:
                assert u in region.vertices and v in region.vertices
            covered |= region.edges
        assert covered == set(g.edges)
        # edge-disjointness
        assert sum(len(reg.edges) for reg in div.regions) == g.m
        # every multi-region vertex is boundary in each of its regions
        for v, mult in div.multiplicity.items():
            owners = [reg for reg in div.regions if v in reg.vertices]
            assert len(owners) == mult
            if mult >= 2:
                assert all(v in reg.boundary for reg in owners)
        assert div.B == sum(m - 1 for m in div.multiplicity.values() if m >= 2)
        assert div.B <= 16 * g.n / math.sqrt(r)


def test_r_division_errors():
    g = grid(3, 3).graph
    with pytest.raises(ValueError):
        relaxed_r_division(g, 2)
    with pytest.raises(NotConnectedError):
        relaxed_r_division(Graph(4, [(0, 1), (2, 3)]), 4)


def test_r_division_deterministic():
    g = grid(5, 5).graph
    a = relaxed_r_division(g, 9)
    b = relaxed_r_division(g, 9)
    assert a.regions == b.regions
