"""Exact two-disjoint-paths decision: brute-force agreement and caps."""

import random
from itertools import permutations

import pytest

from trackpaths.disjoint import two_disjoint_paths
from trackpaths.graph import CapExceededError, Graph
from trackpaths.paths import simple_st_paths


def _brute(graph, a, b, c, d, allowed1, allowed2):
    paths1 = [
        p
        for p in simple_st_paths(graph, a, b, cap=20_000)
        if set(p) <= allowed1 | {a, b}
    ]
    paths2 = [
        p
        for p in simple_st_paths(graph, c, d, cap=20_000)
        if set(p) <= allowed2 | {c, d}
    ]
    return any(not (set(p) & set(q)) for p in paths1 for q in paths2)


def test_matches_brute_force_on_random_graphs():
    rng = random.Random(13)
    for _ in range(150):
        n = rng.randrange(5, 9)
        g = Graph(
            n,
            [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4],
        )
        a, b, c, d = rng.sample(range(n), 4)
        allowed1 = {v for v in range(n) if rng.random() < 0.8} | {a, b}
        allowed2 = {v for v in range(n) if rng.random() < 0.8} | {c, d}
        got = two_disjoint_paths(g, a, b, c, d, allowed1, allowed2)
        assert got == _brute(g, a, b, c, d, allowed1, allowed2)


def test_grid_cases():
    # 3x3 grid, vertices row-major
    edges = []
    for r in range(3):
        for col in range(3):
            v = 3 * r + col
            if col < 2:
                edges.append((v, v + 1))
            if r < 2:
                edges.append((v, v + 3))
    g = Graph(9, edges)
    everything = set(range(9))
    # opposite corners with both middle rows available: disjoint paths exist
    assert two_disjoint_paths(g, 0, 2, 6, 8, everything, everything)
    # crossing demands through the single center vertex: impossible
    assert not two_disjoint_paths(g, 1, 7, 3, 5, {1, 4, 7}, {3, 4, 5})


def test_width_cap_raises_on_dense_graph():
    # complete graph minus (0,1); path 0->1 is confined to {0,1}, so the
    # query is infeasible and the sweep must cross the full frontier
    edges = [(u, v) for u in range(20) for v in range(u + 1, 20) if (u, v) != (0, 1)]
    g = Graph(20, edges)
    with pytest.raises(CapExceededError):
        two_disjoint_paths(g, 0, 1, 2, 3, {0, 1}, set(range(20)), width_cap=6)


def test_symmetric_in_path_order():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.randrange(5, 8)
        g = Graph(
            n,
            [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45],
        )
        a, b, c, d = rng.sample(range(n), 4)
        al1 = {v for v in range(n) if rng.random() < 0.85} | {a, b}
        al2 = {v for v in range(n) if rng.random() < 0.85} | {c, d}
        base = two_disjoint_paths(g, a, b, c, d, al1, al2)
        assert base == two_disjoint_paths(g, b, a, d, c, al1, al2)
        assert base == two_disjoint_paths(g, c, d, a, b, al2, al1)
