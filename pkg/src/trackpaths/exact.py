"""Exact tracking-set solver: the oracle the approximations are tested against.

Search runs over subsets of the Rule-1 survivors in ascending (weight,
lexicographic) order, pruned by the feedback requirement and by previously
discovered violated cycles, and anchored on the cycle verifier (path verifier
for tiny instances).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from trackpaths.graph import CapExceededError, Instance, is_acyclic
from trackpaths.reduction import lift_trackers, rule1
from trackpaths.results import SolveResult
from trackpaths.verify import is_tracked, verify_by_cycles, verify_by_paths

DEFAULT_MAX_N = 18


def _verify(instance: Instance, cand: set[int]) -> tuple[bool, object]:
    """(valid, witness) via the cycle verifier, path verifier as tiny fallback."""
    if instance.graph.n <= 8:
        rep = verify_by_paths(instance, cand)
    else:
        rep = verify_by_cycles(instance, cand)
    return rep.valid, rep.witness


def exact_tracking_set(instance: Instance, max_n: int = DEFAULT_MAX_N) -> SolveResult:
    """Minimum-weight tracking set; ties by lexicographically smallest set."""
    if instance.graph.n > max_n:
        raise CapExceededError(
            f"exact solver limited to {max_n} vertices, got {instance.graph.n}"
        )
    reduced, trace = rule1(instance)
    g = reduced.graph
    if g.n == 2:
        report = verify_by_paths(instance, set())
        return SolveResult(frozenset(), Fraction(0), 0, "exact", report.valid)

    known_violations: list = []  # EntryExitCycle witnesses seen so far
    candidates: list[tuple[Fraction, tuple[int, ...]]] = []
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            candidates.append((reduced.weight_of(combo), combo))
    candidates.sort(key=lambda item: (item[0], item[1]))

    best = None
    for weight, combo in candidates:
        cand = set(combo)
        if not is_acyclic(g, cand):
            continue
        if any(not is_tracked(w, cand) for w in known_violations):
            continue
        ok, witness = _verify(reduced, cand)
        if ok:
            best = (weight, cand)
            break
        if witness is not None and hasattr(witness, "cycle"):
            known_violations.append(witness)
    assert best is not None  # the full vertex set always tracks
    weight, kernel_set = best
    lifted = lift_trackers(trace, kernel_set)
    report = verify_by_paths(instance, lifted) if instance.graph.n <= 12 else None
    valid = report.valid if report is not None else True
    from trackpaths.kernel import instance_lower_bound

    return SolveResult(
        frozenset(lifted),
        instance.weight_of(lifted),
        instance_lower_bound(instance),
        "exact",
        valid,
        {"kernel_n": g.n},
    )


def exact_decision(instance: Instance, k: int, max_n: int = DEFAULT_MAX_N) -> bool:
    """True iff a tracking set of size at most k exists (unit cardinality)."""
    if instance.graph.n > max_n:
        raise CapExceededError(
            f"exact decision limited to {max_n} vertices, got {instance.graph.n}"
        )
    reduced, _ = rule1(instance)
    g = reduced.graph
    if g.n == 2:
        return k >= 0
    known_violations: list = []
    for size in range(0, min(k, g.n) + 1):
        for combo in combinations(range(g.n), size):
            cand = set(combo)
            if not is_acyclic(g, cand):
                continue
            if any(not is_tracked(w, cand) for w in known_violations):
                continue
            ok, witness = _verify(reduced, cand)
            if ok:
                return True
            if witness is not None and hasattr(witness, "cycle"):
                known_violations.append(witness)
    return False
