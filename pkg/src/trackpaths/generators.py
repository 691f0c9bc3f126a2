"""Seeded instance generators for benchmarks and tests."""

from __future__ import annotations

import random
from typing import Optional

from trackpaths.graph import Graph, Instance, is_connected
from trackpaths.paths import reachable
from trackpaths.reduction import reduce_all


def random_reduced(n: int, p: float, seed: int) -> Optional[Instance]:
    """A Rules-1-3-reduced Erdős–Rényi instance with s=0, t=n-1, or None
    when the draw has no s-t path or reduces to a single edge."""
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    try:
        inst = Instance(Graph(n, edges), 0, n - 1)
    except ValueError:
        return None
    if inst.t not in reachable(inst.graph, inst.s, set(range(n))):
        return None
    reduced, _ = reduce_all(inst)
    if reduced.graph.n <= 2:
        return None
    return reduced


def grid(width: int, height: int, perturb: int = 0, seed: int = 0) -> Instance:
    """A width x height grid from corner to corner, planar-declared; with
    ``perturb`` > 0, that many random edges are removed, keeping the graph
    connected."""
    idx = lambda r, c: r * width + c  # noqa: E731
    edges = set()
    for r in range(height):
        for c in range(width):
            if c + 1 < width:
                edges.add((idx(r, c), idx(r, c + 1)))
            if r + 1 < height:
                edges.add((idx(r, c), idx(r + 1, c)))
    n = width * height
    rng = random.Random(seed)
    for _ in range(perturb):
        for e in rng.sample(sorted(edges), len(edges)):
            if is_connected(Graph(n, edges - {e})):
                edges.discard(e)
                break
    return Instance(Graph(n, edges), 0, n - 1, declared_class="planar")


def theta(arms: int, arm_length: int = 2) -> Instance:
    """``arms`` internally disjoint s-t paths with ``arm_length`` internal
    vertices each (arms=3, arm_length=1 is the classic theta graph)."""
    if arms < 2 or arm_length < 1:
        raise ValueError("need at least 2 arms of length at least 1")
    n = 2 + arms * arm_length
    s, t = 0, 1
    edges = []
    vid = 2
    for _ in range(arms):
        prev = s
        for _ in range(arm_length):
            edges.append((prev, vid))
            prev = vid
            vid += 1
        edges.append((prev, t))
    return Instance(Graph(n, edges), s, t, declared_class="planar")


def k4_chain(blocks: int) -> Instance:
    """A chain of ``blocks`` K4 blocks glued at cut vertices, s to t."""
    if blocks < 1:
        raise ValueError("need at least one block")
    n = 3 * blocks + 1
    edges = []
    for b in range(blocks):
        vs = [3 * b + i for i in range(4)]
        edges.extend(
            (vs[i], vs[j]) for i in range(4) for j in range(i + 1, 4)
        )
    return Instance(Graph(n, edges), 0, n - 1, declared_class="planar")
