"""Common result record for all solvers."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class SolveResult:
    trackers: frozenset[int]  # original-graph vertex ids
    total_weight: Fraction
    lower_bound: int
    method: str
    valid: bool
    stats: dict = field(default_factory=dict, compare=False)
