"""The two general-graph approximation pipelines.

Both run per block of the s-t block chain and take the disjoint union of the
per-block solutions.  The weighted pipeline covers the entry-exit cycle family
with a greedy weighted set cover; the unweighted pipeline hits the dual family
with the bounded-VC iterative-reweighting scheme.
"""

from __future__ import annotations

import time
from typing import Optional

from trackpaths.cover import SetSystem, VCConfig, bg_hitting_set, greedy_weighted_set_cover
from trackpaths.cycles import enumerate_cf, expand_entry_exit
from trackpaths.fvs import fvs_2approx
from trackpaths.graph import Instance, block_chain
from trackpaths.kernel import instance_lower_bound
from trackpaths.reduction import lift_trackers, reduce_all, rule1
from trackpaths.results import SolveResult
from trackpaths.verify import verify_by_cycles


def _prepare(instance: Instance, prereduce: bool):
    """Rule 1 alone (one pass reaches its fixpoint) or the full Rules 1-3."""
    if prereduce:
        return reduce_all(instance)
    return rule1(instance)


def _component_family(comp: Instance, fvs: frozenset[int]):
    """The entry-exit cycle family of one block, against the block's own s-t."""
    return expand_entry_exit(comp, enumerate_cf(comp, fvs))


_lower_bound = instance_lower_bound


def approx_logn_weighted(instance: Instance, prereduce: bool = True) -> SolveResult:
    """Greedy-cover pipeline: T = greedy cover of the cycle family, plus a
    2-approximate feedback vertex set, solved per block of the chain."""
    t0 = time.perf_counter()
    kernel, trace = _prepare(instance, prereduce)
    lb = _lower_bound(instance)
    if kernel.graph.n == 2:
        return SolveResult(frozenset(), instance.weight_of(()), lb, "logn", True,
                           {"fvs": 0, "cycles": 0, "cover": 0})
    trackers: set[int] = set()
    fvs_total = cycles_total = cover_total = 0
    for comp in block_chain(kernel).components:
        sub = comp.instance
        f = fvs_2approx(sub)
        fvs_total += len(f.vertices)
        if f.vertices:
            family = _component_family(sub, f.vertices)
            cycles_total += len(family.cycles)
            chosen = _greedy_component(sub, family)
            cover_total += len(chosen)
            local = set(f.vertices) | chosen
        else:
            local = set()
        trackers.update(comp.to_parent[v] for v in local)
    report = verify_by_cycles(kernel, trackers)
    lifted = lift_trackers(trace, trackers)
    stats = {
        "fvs": fvs_total,
        "cycles": cycles_total,
        "cover": cover_total,
        "seconds": time.perf_counter() - t0,
    }
    return SolveResult(
        frozenset(lifted), instance.weight_of(lifted), lb, "logn", report.valid, stats
    )


def _greedy_component(sub: Instance, family) -> set[int]:
    """Greedy weighted cover of the block's entry-exit cycles by vertices.

    The block's own s and t (the chain's cut vertices) track nothing: a
    feasible pair's connection paths avoid the cycle except at the pair, so
    s/t can only appear on a feasible cycle as the pair itself.
    """
    if not family.eecs:
        return set()
    universe = range(len(family.eecs))
    candidates = [v for v in range(sub.graph.n) if v not in (sub.s, sub.t)]
    sets = []
    for v in candidates:
        covered = frozenset(
            i
            for i, eec in enumerate(family.eecs)
            if v in eec.cycle and v not in (eec.entry, eec.exit)
        )
        if covered:
            sets.append((v, covered, sub.weights[v]))
    system = SetSystem.build(universe, sets)
    chosen, _ = greedy_weighted_set_cover(system)
    return set(chosen)


def approx_logopt_unweighted(
    instance: Instance, cfg: VCConfig = VCConfig(), prereduce: bool = True
) -> SolveResult:
    """Dual-hitting pipeline for unit weights: hit every range C minus its
    entry-exit pair, plus a 2-approximate feedback vertex set, per block."""
    if not instance.is_unit_weighted():
        raise ValueError("the dual-hitting pipeline requires unit weights")
    t0 = time.perf_counter()
    kernel, trace = _prepare(instance, prereduce)
    lb = _lower_bound(instance)
    if kernel.graph.n == 2:
        return SolveResult(frozenset(), instance.weight_of(()), lb, "logopt", True,
                           {"fvs": 0, "cycles": 0, "hitters": 0})
    trackers: set[int] = set()
    fvs_total = cycles_total = hit_total = 0
    start_guess = max(1, lb)
    for comp in block_chain(kernel).components:
        sub = comp.instance
        f = fvs_2approx(sub)
        fvs_total += len(f.vertices)
        if f.vertices:
            family = _component_family(sub, f.vertices)
            cycles_total += len(family.cycles)
            ranges = [
                frozenset(set(eec.cycle) - {eec.entry, eec.exit})
                for eec in family.eecs
            ]
            candidates = [v for v in range(sub.graph.n) if v not in (sub.s, sub.t)]
            hitters = bg_hitting_set(candidates, ranges, cfg, start_guess=start_guess)
            hit_total += len(hitters)
            local = set(f.vertices) | hitters
        else:
            local = set()
        trackers.update(comp.to_parent[v] for v in local)
    report = verify_by_cycles(kernel, trackers)
    lifted = lift_trackers(trace, trackers)
    stats = {
        "fvs": fvs_total,
        "cycles": cycles_total,
        "hitters": hit_total,
        "seconds": time.perf_counter() - t0,
    }
    return SolveResult(
        frozenset(lifted), instance.weight_of(lifted), lb, "logopt", report.valid, stats
    )
