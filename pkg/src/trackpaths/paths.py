"""Path primitives shared by the reduction rules and verifiers.

The workhorse is a tiny unit-vertex-capacity max-flow used to decide whether
a vertex (or edge) lies on some simple s-t path: a vertex v does iff there are
two internally vertex-disjoint paths from v reaching s and t respectively.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Optional

from trackpaths.graph import Graph, norm_edge


def reachable(graph: Graph, src: int, allowed: set[int]) -> set[int]:
    """Vertices reachable from src using only vertices in ``allowed``."""
    if src not in allowed:
        return set()
    seen = {src}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in graph.adjacency[u]:
            if v in allowed and v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def _augment(caps: dict[tuple[int, int], int], adj: dict[int, list[int]], src, snk) -> bool:
    """One BFS augmentation of unit flow on the residual network."""
    prev = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == snk:
            break
        for v in adj[u]:
            if v not in prev and caps.get((u, v), 0) > 0:
                prev[v] = u
                queue.append(v)
    if snk not in prev:
        return False
    v = snk
    while prev[v] is not None:
        u = prev[v]
        caps[(u, v)] -= 1
        caps[(v, u)] = caps.get((v, u), 0) + 1
        v = u
    return True


def two_disjoint_to_terminals(
    graph: Graph, v: int, s: int, t: int, allowed: Optional[set[int]] = None
) -> bool:
    """True iff v lies on a simple s-t path within ``allowed`` vertices.

    Equivalent to the existence of two paths v-s and v-t that share only v,
    decided by a 2-unit max-flow with unit vertex capacities.
    """
    if allowed is None:
        allowed = set(range(graph.n))
    if v not in allowed or s not in allowed or t not in allowed:
        return False
    if v == s:
        return t in reachable(graph, s, allowed)
    if v == t:
        return s in reachable(graph, t, allowed)
    # node ids: 2*u = u_in, 2*u+1 = u_out; super sink = -1
    SINK = -1
    caps: dict[tuple[int, int], int] = {}
    adj: dict[int, list[int]] = {SINK: []}
    for u in allowed:
        adj.setdefault(2 * u, []).append(2 * u + 1)
        adj.setdefault(2 * u + 1, []).append(2 * u)
        caps[(2 * u, 2 * u + 1)] = 2 if u == v else 1
    for a, b in graph.edges:
        if a in allowed and b in allowed:
            for x, y in ((a, b), (b, a)):
                adj[2 * x + 1].append(2 * y)
                adj[2 * y].append(2 * x + 1)
                caps[(2 * x + 1, 2 * y)] = 1
    for term in (s, t):
        adj[2 * term + 1].append(SINK)
        adj[SINK].append(2 * term + 1)
        caps[(2 * term + 1, SINK)] = 1
    src = 2 * v  # capacity 2 through v's own arc
    flow = 0
    while flow < 2 and _augment(caps, adj, src, SINK):
        flow += 1
    return flow == 2


def edge_on_st_path(
    graph: Graph, u: int, w: int, s: int, t: int, allowed: Optional[set[int]] = None
) -> bool:
    """True iff edge (u,w) lies on some simple s-t path within ``allowed``.

    Decided by subdividing the edge with a fresh vertex and applying the
    vertex test to it.
    """
    if allowed is None:
        allowed = set(range(graph.n))
    e = norm_edge(u, w)
    if e not in graph.edges or u not in allowed or w not in allowed:
        return False
    x = graph.n  # subdivision vertex
    edges = [f for f in graph.edges if f != e]
    edges += [(u, x), (w, x)]
    g2 = Graph(graph.n + 1, edges)
    return two_disjoint_to_terminals(g2, x, s, t, allowed | {x})


def simple_st_paths(
    graph: Graph,
    s: int,
    t: int,
    allowed: Optional[set[int]] = None,
    cap: Optional[int] = None,
) -> Iterator[list[int]]:
    """Yield all simple s-t paths (as vertex lists) in deterministic order.

    Raises RuntimeError once more than ``cap`` paths have been produced.
    """
    if allowed is None:
        allowed = set(range(graph.n))
    if s not in allowed or t not in allowed:
        return
    count = 0
    path = [s]
    on_path = {s}

    def dfs(u: int) -> Iterator[list[int]]:
        nonlocal count
        if u == t:
            count += 1
            if cap is not None and count > cap:
                raise RuntimeError("path count cap exceeded")
            yield list(path)
            return
        for v in graph.adjacency[u]:
            if v in allowed and v not in on_path:
                path.append(v)
                on_path.add(v)
                yield from dfs(v)
                path.pop()
                on_path.discard(v)

    yield from dfs(s)


def count_st_paths(graph: Graph, s: int, t: int, cap: int) -> int:
    """Number of simple s-t paths, or raises RuntimeError beyond ``cap``."""
    n = 0
    for _ in simple_st_paths(graph, s, t, cap=cap):
        n += 1
    return n
