"""Entry-exit pair semantics and the two tracking-set verifiers.

A tracker set is valid iff the tracker subsequence of every simple s-t path
is unique.  ``verify_by_paths`` checks this directly by enumeration;
``verify_by_cycles`` checks the equivalent covering condition: the set is a
feedback vertex set and every entry-exit cycle carrying at most two trackers
has a tracker off its entry/exit pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Union

from trackpaths.graph import (
    CapExceededError,
    Graph,
    Instance,
    NotReducedError,
    find_cycle,
    is_acyclic,
)
from trackpaths.disjoint import two_disjoint_paths
from trackpaths.paths import reachable, simple_st_paths

DEFAULT_PATH_CAP = 200_000
_DFS_PROBE_BUDGET = 20_000
_SEARCH_BUDGET = 500_000


@dataclass(frozen=True)
class EntryExitCycle:
    """A simple cycle with an ordered entry/exit pair on it."""

    cycle: tuple[int, ...]  # canonical vertex sequence
    entry: int
    exit: int

    def __post_init__(self):
        if self.entry == self.exit:
            raise ValueError("entry and exit must differ")
        if self.entry not in self.cycle or self.exit not in self.cycle:
            raise ValueError("entry/exit must lie on the cycle")
        if len(self.cycle) < 3 or len(set(self.cycle)) != len(self.cycle):
            raise ValueError("cycle must have >= 3 distinct vertices")


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    # a colliding pair of s-t paths, or an untracked entry-exit cycle
    witness: Optional[Union[tuple[tuple[int, ...], tuple[int, ...]], EntryExitCycle]] = None

    def __post_init__(self):
        if self.valid and self.witness is not None:
            raise ValueError("witness only accompanies an invalid report")
        if not self.valid and self.witness is None:
            raise ValueError("invalid report requires a witness")


def canonical_cycle(seq: Iterable[int]) -> tuple[int, ...]:
    """Rotate to the minimum vertex, then orient toward the smaller second vertex."""
    vs = list(seq)
    i = vs.index(min(vs))
    rotated = vs[i:] + vs[:i]
    if len(rotated) >= 3 and rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def _has_connection(
    graph: Graph, s: int, t: int, sub: frozenset[int], sp: int, tp: int
) -> bool:
    """Two vertex-disjoint paths s->sp and tp->t touching ``sub`` only at sp/tp."""
    all_v = set(range(graph.n))
    if s in sub and s != sp:
        return False
    if t in sub and t != tp:
        return False
    allowed1 = (all_v - sub - {t}) | {sp}
    allowed2 = (all_v - sub - {s}) | {tp}
    if s == sp and t == tp:
        return True
    if s == sp:
        return t in reachable(graph, tp, allowed2 - {s})
    if t == tp:
        return sp in reachable(graph, s, allowed1 - {t})
    key = (graph, s, t, sub, sp, tp)
    hit = _conn_cache.get(key)
    if hit is None:
        hit = _connection_search(graph, s, t, sp, tp, allowed1, allowed2)
        if len(_conn_cache) > 500_000:
            _conn_cache.clear()
        _conn_cache[key] = hit
    return hit


_conn_cache: dict[tuple, bool] = {}


def _connection_search(
    graph: Graph,
    s: int,
    t: int,
    sp: int,
    tp: int,
    allowed1: set[int],
    allowed2: set[int],
) -> bool:
    """Layered decision: necessary reachability, cheap sufficient probes, a
    bounded path search, then the exact disjoint-paths dynamic program."""
    if sp not in reachable(graph, s, allowed1):
        return False
    if t not in reachable(graph, tp, allowed2):
        return False
    # cheap sufficient checks: one shortest path, then test the other side
    p1 = _shortest_path(graph, s, sp, allowed1)
    if p1 is not None and t in reachable(graph, tp, allowed2 - set(p1)):
        return True
    p2 = _shortest_path(graph, tp, t, allowed2)
    if p2 is not None and sp in reachable(graph, s, allowed1 - set(p2)):
        return True
    found = _bounded_path_search(graph, s, t, sp, tp, allowed1, allowed2, _DFS_PROBE_BUDGET)
    if found is not None:
        return found
    try:
        return two_disjoint_paths(graph, s, sp, tp, t, allowed1, allowed2)
    except CapExceededError:
        # frontier too wide for the exact program; one deep bounded search,
        # then an honest abort
        found = _bounded_path_search(
            graph, s, t, sp, tp, allowed1, allowed2, _SEARCH_BUDGET
        )
        if found is not None:
            return found
        raise


def _bounded_path_search(
    graph: Graph,
    s: int,
    t: int,
    sp: int,
    tp: int,
    allowed1: set[int],
    allowed2: set[int],
    budget: int,
) -> Optional[bool]:
    """DFS over candidate paths s->sp with reachability pruning; None on
    budget exhaustion."""
    remaining = [budget]
    path_set = {s}

    def dfs(u: int) -> bool:
        remaining[0] -= 1
        if remaining[0] < 0:
            raise _BudgetExhausted
        if u == sp:
            return t in reachable(graph, tp, allowed2 - path_set)
        if t not in reachable(graph, tp, allowed2 - path_set):
            return False
        for v in graph.adjacency[u]:
            if v in allowed1 and v not in path_set:
                path_set.add(v)
                if dfs(v):
                    return True
                path_set.discard(v)
        return False

    try:
        return dfs(s)
    except _BudgetExhausted:
        return None


class _BudgetExhausted(Exception):
    pass


def _shortest_path(
    graph: Graph, src: int, dst: int, allowed: set[int]
) -> Optional[list[int]]:
    from collections import deque

    if src not in allowed or dst not in allowed:
        return None
    prev: dict[int, Optional[int]] = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            path = []
            x: Optional[int] = u
            while x is not None:
                path.append(x)
                x = prev[x]
            return path[::-1]
        for v in graph.adjacency[u]:
            if v in allowed and v not in prev:
                prev[v] = u
                queue.append(v)
    return None


def entry_exit_pairs(
    instance: Instance,
    sub_vertices: Iterable[int],
    sub_edges: Optional[Iterable[tuple[int, int]]] = None,
) -> list[tuple[int, int]]:
    """All ordered (entry, exit) pairs of the subgraph per the four conditions.

    ``sub_edges`` defaults to the edges induced by ``sub_vertices``; the
    subgraph must contain at least one edge.
    """
    sub = frozenset(sub_vertices)
    g = instance.graph
    if sub_edges is None:
        sub_edges = [e for e in g.edges if e[0] in sub and e[1] in sub]
    if not list(sub_edges):
        raise ValueError("subgraph has no edges")
    pairs = []
    for sp in sorted(sub):
        for tp in sorted(sub):
            if sp != tp and _has_connection(g, instance.s, instance.t, sub, sp, tp):
                pairs.append((sp, tp))
    return pairs


_pair_cache: dict[tuple[Instance, tuple[int, ...]], tuple[tuple[int, int], ...]] = {}


def cycle_entry_exit_pairs(instance: Instance, cycle: Iterable[int]) -> tuple[tuple[int, int], ...]:
    """Entry-exit pairs of a cycle, cached per (instance, canonical cycle)."""
    canon = canonical_cycle(cycle)
    key = (instance, canon)
    hit = _pair_cache.get(key)
    if hit is None:
        cyc_edges = [
            (canon[i], canon[(i + 1) % len(canon)]) for i in range(len(canon))
        ]
        hit = tuple(entry_exit_pairs(instance, canon, sub_edges=cyc_edges))
        if len(_pair_cache) > 200_000:
            _pair_cache.clear()
        _pair_cache[key] = hit
    return hit


def is_tracked(eec: EntryExitCycle, trackers: set[int]) -> bool:
    return any(v in trackers for v in eec.cycle if v not in (eec.entry, eec.exit))


def untracked_pair(
    instance: Instance, cycle: Iterable[int], trackers: set[int]
) -> Optional[tuple[int, int]]:
    """The smallest feasible entry-exit pair of the cycle left untracked, or
    None when the cycle is tracked for every feasible pair.

    Only pairs whose {entry, exit} covers every on-cycle tracker can be
    untracked, so a cycle carrying three or more trackers needs no queries.
    """
    canon = canonical_cycle(cycle)
    on_cycle = sorted(v for v in canon if v in trackers)
    if len(on_cycle) >= 3:
        return None
    if len(on_cycle) == 2:
        x, y = on_cycle
        candidates = [(x, y), (y, x)]
    elif len(on_cycle) == 1:
        x = on_cycle[0]
        rest = [v for v in sorted(canon) if v != x]
        candidates = sorted([(x, v) for v in rest] + [(v, x) for v in rest])
    else:
        vs = sorted(canon)
        candidates = [(a, b) for a in vs for b in vs if a != b]
    sub = frozenset(canon)
    g = instance.graph
    for sp, tp in candidates:
        if _has_connection(g, instance.s, instance.t, sub, sp, tp):
            return (sp, tp)
    return None


def verify_by_paths(
    instance: Instance, trackers: set[int], cap: int = DEFAULT_PATH_CAP
) -> VerifyReport:
    """Check tracker-sequence uniqueness by enumerating all simple s-t paths."""
    g = instance.graph
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    try:
        for path in simple_st_paths(g, instance.s, instance.t, cap=cap):
            sig = tuple(v for v in path if v in trackers)
            if sig in seen:
                return VerifyReport(False, (seen[sig], tuple(path)))
            seen[sig] = tuple(path)
    except RuntimeError as exc:
        raise CapExceededError("instance too large for path verifier") from exc
    return VerifyReport(True)


@lru_cache(maxsize=4096)
def _rule1_reduced(instance: Instance) -> bool:
    from trackpaths.reduction import is_rule1_reduced

    return is_rule1_reduced(instance)


def verify_by_cycles(instance: Instance, trackers: set[int]) -> VerifyReport:
    """Check the covering characterization: FVS plus tracked entry-exit cycles."""
    from trackpaths.cycles import enumerate_cf

    if not _rule1_reduced(instance):
        raise NotReducedError("cycle verifier requires a Rule-1-reduced instance")
    g = instance.graph
    trackers = set(trackers)
    if not is_acyclic(g, trackers):
        cyc = find_cycle(g, trackers)
        assert cyc is not None
        pairs = cycle_entry_exit_pairs(instance, cyc)
        sp, tp = pairs[0]
        return VerifyReport(False, EntryExitCycle(canonical_cycle(cyc), sp, tp))
    # every simple cycle meets the (feedback) tracker set; cycles meeting it
    # thrice are tracked outright, so only the enumerated family needs queries
    family = enumerate_cf(instance, trackers)
    for cyc in family.cycles:
        pair = untracked_pair(instance, cyc, trackers)
        if pair is not None:
            return VerifyReport(False, EntryExitCycle(cyc, pair[0], pair[1]))
    return VerifyReport(True)
