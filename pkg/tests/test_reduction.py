"""Reduction rules 1-3: spec anchor cases, traces, transfer, idempotence."""

import random

import pytest

from conftest import c4_instance, reduced_corpus, theta_instance
from trackpaths.graph import Graph, Instance
from trackpaths.reduction import (
    identity_trace,
    is_reduced,
    lift_trackers,
    reduce_all,
    rule1,
    rule2,
    rule3,
)
from trackpaths.verify import verify_by_paths


def test_rule1_removes_pendant():
    # path s-a-t with pendant c on a
    g = Graph(4, [(0, 1), (1, 2), (1, 3)])
    reduced, trace = rule1(Instance(g, 0, 2))
    assert reduced.graph.n == 3
    assert trace.applied_rules[0][0] == "rule1"


def test_rule1_keeps_four_cycle():
    inst = c4_instance()
    reduced, trace = rule1(inst)
    assert reduced.graph == inst.graph
    assert trace.applied_rules == ()


def test_rule1_drops_hanging_triangle():
    # 4-cycle s-a-t-b plus triangle a-x-y-a joined at cut vertex a
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 1)])
    reduced, _ = rule1(Instance(g, 0, 2))
    assert reduced.graph.n == 4
    assert reduced.graph.m == 4


def test_rule1_infeasible_instance_errors():
    g = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        rule1(Instance(g, 0, 3))


def test_rule2_relabels_terminals_inward():
    # chain s-x-a-t-y: s and y degree 1
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    reduced, trace = rule2(Instance(g, 0, 4))
    assert trace.relabeled_s != 0 or trace.relabeled_t != 4
    s, t = reduced.s, reduced.t
    g2 = reduced.graph
    assert g2.degree(s) >= 2 or g2.adjacency[s] == (t,) or g2.n == 2


def test_rule2_single_edge_unchanged():
    inst = Instance(Graph(2, [(0, 1)]), 0, 1)
    reduced, trace = rule2(inst)
    assert reduced.graph == inst.graph
    assert trace.applied_rules == ()


def test_rule3_contracts_six_cycle_to_four_cycle():
    # 6-cycle s-a-b-t-c-d-s
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
    inst = Instance(g, 0, 3)
    reduced, trace = rule3(inst)
    assert reduced.graph.n == 4
    assert reduced.graph.m == 4
    merged = [o for o in trace.origin_map if len(o) >= 2]
    assert len(merged) == 2


def test_rule3_keeps_four_cycle_and_triangle():
    for inst in (c4_instance(), Instance(Graph(3, [(0, 1), (1, 2), (2, 0)]), 0, 2)):
        reduced, trace = rule3(inst)
        assert reduced.graph == inst.graph


def test_reduce_all_theta_fixpoint_and_idempotent():
    inst = theta_instance()
    reduced, trace = reduce_all(inst)
    assert reduced.graph == inst.graph
    assert is_reduced(inst)
    again, _ = reduce_all(reduced)
    assert again.graph == reduced.graph


def test_reduce_all_six_cycle_traces_merges():
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
    reduced, trace = reduce_all(Instance(g, 0, 3))
    assert reduced.graph.n == 4
    lifted = lift_trackers(trace, {v for v in range(4) if len(trace.origin_map[v]) >= 2})
    assert len(lifted) == 2


def test_lift_trackers_identity_and_errors():
    inst = c4_instance()
    trace = identity_trace(inst)
    assert lift_trackers(trace, {1}) == {1}
    assert lift_trackers(trace, set()) == set()
    with pytest.raises(ValueError):
        lift_trackers(trace, {9})


def test_trace_origin_sets_disjoint_and_degree2_paths():
    for inst in reduced_corpus(20, seed=21, n_lo=6, n_hi=12):
        # re-reduce an unreduced parent: stretch one edge into a long path
        g = inst.graph
        u, v = sorted(g.edges)[0]
        n = g.n
        edges = (set(g.edges) - {(u, v)}) | {(u, n), (n, n + 1), (n + 1, v)}
        parent = Instance(Graph(n + 2, edges), inst.s, inst.t)
        reduced, trace = reduce_all(parent)
        seen = set()
        for origin in trace.origin_map:
            assert origin and not (origin & seen)
            seen |= origin
            if len(origin) >= 2:
                assert all(parent.graph.degree(x) == 2 for x in origin)


def test_solution_transfer_small_corpus():
    for i, inst in enumerate(reduced_corpus(25, seed=31, n_lo=5, n_hi=10)):
        g = inst.graph
        u, v = sorted(g.edges)[0]
        n = g.n
        edges = (set(g.edges) - {(u, v)}) | {(u, n), (n, n + 1), (n + 1, v)}
        parent = Instance(Graph(n + 2, edges), inst.s, inst.t)
        reduced, trace = reduce_all(parent)
        # the full vertex set of the kernel always tracks; lift and verify
        kernel_trackers = set(range(reduced.graph.n))
        lifted = lift_trackers(trace, kernel_trackers)
        assert verify_by_paths(parent, lifted).valid


def _random_order_fixpoint(instance, rng):
    current = instance
    rules = [rule1, rule2, rule3]
    stall = 0
    while stall < len(rules):
        rule = rules[rng.randrange(3)]
        nxt, _ = rule(current)
        if (nxt.graph, nxt.s, nxt.t) == (current.graph, current.s, current.t):
            stall += 1
        else:
            stall = 0
        current = nxt
    # confirm a true fixpoint of all three rules
    for rule in rules:
        nxt, _ = rule(current)
        if (nxt.graph, nxt.s, nxt.t) != (current.graph, current.s, current.t):
            return _random_order_fixpoint(nxt, rng)
    return current


def test_rule_order_insensitive_kernel_size():
    rng = random.Random(77)
    for inst in reduced_corpus(10, seed=41, n_lo=5, n_hi=9):
        g = inst.graph
        u, v = sorted(g.edges)[0]
        n = g.n
        edges = (set(g.edges) - {(u, v)}) | {(u, n), (n, n + 1), (n + 1, v)}
        parent = Instance(Graph(n + 2, edges), inst.s, inst.t)
        baseline, _ = reduce_all(parent)
        for _ in range(3):
            shuffled = _random_order_fixpoint(parent, rng)
            assert shuffled.graph.n == baseline.graph.n
