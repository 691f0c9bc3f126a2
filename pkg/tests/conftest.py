"""Shared fixtures: anchor instances, seeded corpora, and brute-force oracles."""

from __future__ import annotations

import random

import pytest

from trackpaths.generators import random_reduced
from trackpaths.graph import Graph, Instance


def c4_instance() -> Instance:
    """4-cycle, s and t opposite."""
    return Instance(Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), 0, 2)


def theta_instance() -> Instance:
    """Three internally disjoint s-t paths of length 2."""
    return Instance(Graph(5, [(0, 1), (1, 4), (0, 2), (2, 4), (0, 3), (3, 4)]), 0, 4)


def k4_instance() -> Instance:
    return Instance(
        Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]), 0, 3
    )


def single_edge_instance() -> Instance:
    return Instance(Graph(2, [(0, 1)]), 0, 1)


@pytest.fixture(scope="session")
def anchors():
    return {
        "single": single_edge_instance(),
        "c4": c4_instance(),
        "theta": theta_instance(),
        "k4": k4_instance(),
    }


def reduced_corpus(count: int, seed: int, n_lo: int, n_hi: int, p=0.4):
    """Seeded Rules-1-3-reduced random instances, sizes in [n_lo, n_hi]."""
    rng = random.Random(seed)
    out = []
    attempt = 0
    while len(out) < count and attempt < 100 * count:
        n = rng.randrange(n_lo, n_hi + 1)
        inst = random_reduced(n, p, seed * 100_000 + attempt)
        attempt += 1
        if inst is not None and inst.graph.n <= n_hi:
            out.append(inst)
    assert len(out) == count, f"corpus generation starved at {len(out)}/{count}"
    return out


def random_weights(instance: Instance, seed: int) -> Instance:
    rng = random.Random(seed)
    w = tuple(rng.randrange(1, 10) for _ in range(instance.graph.n))
    return Instance(instance.graph, instance.s, instance.t, w, instance.declared_class)
