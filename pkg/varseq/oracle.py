"""
Exhaustive permutation oracle for VarSeq

Enumerates every arrangement of a small number set and returns all
arrangements attaining the best f. Integer and rational inputs are compared
exactly through n^2 f; float inputs are grouped with a relative tolerance.
"""

from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import permutations
from typing import Optional

from .constants import DEFAULT_ORACLE_LIMIT, HARD_ORACLE_LIMIT, ORANGE, RESET
from .core import Number, NumberSet, exact_numerator, float_variance
from .errors import InstanceTooLarge
from .utils import same_value


class Objective(Enum):
    MAX_VARIANCE = 'max'
    MIN_VARIANCE = 'min'


@dataclass(frozen=True)
class OracleResult:
    """All optimal arrangements of a number set.

    Attributes:
        objective: which direction was optimized
        optima: optimal sequences in lexicographic order of their entries
        best_value: n^2 f on the exact path, the float variance otherwise
        explored: number of permutations evaluated
        pinned_first: True when c_1 = a_1 was fixed to shrink the search
    """

    objective: Objective
    optima: tuple
    best_value: Number
    explored: int
    pinned_first: bool = False

    @property
    def n(self) -> int:
        return self.optima[0].n

    @property
    def exact(self) -> bool:
        return self.optima[0].exact

    @property
    def best_variance(self) -> Number:
        if self.exact:
            return Fraction(self.best_value) / (self.n * self.n)
        return self.best_value


def _improves(candidate, best, maximize, exact):
    if best is None:
        return True
    if not exact and same_value(candidate, best):
        return False
    return candidate > best if maximize else candidate < best


def _scan_branch(values, first, maximize, exact):
    """Evaluate every permutation starting with values[first].

    Returns (best, arrangements attaining it, count). Module level so it
    can be shipped to worker processes.
    """
    head = values[first]
    rest = values[:first] + values[first + 1:]
    key = exact_numerator if exact else float_variance
    best = None
    winners = []
    count = 0
    seen = set()
    for tail in permutations(rest):
        count += 1
        entries = (head,) + tail
        value = key(entries)
        if _improves(value, best, maximize, exact):
            if best is not None and not exact:
                winners = [(v, e) for v, e in winners if same_value(v, value)]
                seen = {e for _, e in winners}
            else:
                winners, seen = [], set()
            best = value
        if (value == best if exact else same_value(value, best)) and entries not in seen:
            seen.add(entries)
            winners.append((value, entries))
    return best, winners, count


def brute_force(number_set: NumberSet, objective: Objective = Objective.MAX_VARIANCE,
                limit_n: int = DEFAULT_ORACLE_LIMIT, pin_first: bool = False,
                workers: Optional[int] = None) -> OracleResult:
    """Enumerate every arrangement and return all optimal ones.

    Args:
        number_set: the values to arrange
        objective: maximize or minimize f
        limit_n: refuse instances with n above this (never above 11)
        pin_first: fix c_1 = a_1 (maximization only) to divide the work by n
        workers: worker processes for the per-leading-value branches

    Raises:
        InstanceTooLarge: n exceeds the limit
        ValueError: pin_first requested for minimization
    """
    n = number_set.n
    limit = min(limit_n, HARD_ORACLE_LIMIT)
    if n > limit:
        raise InstanceTooLarge(n, limit)
    if pin_first and objective is not Objective.MAX_VARIANCE:
        raise ValueError("pinning c_1 = a_1 is only valid when maximizing")

    exact = number_set.exact
    if not exact:
        print(f"{ORANGE}Warning: float inputs; optima are grouped with relative tolerance "
              f"and may include near-ties{RESET}", file=sys.stderr)

    values = number_set.values
    maximize = objective is Objective.MAX_VARIANCE
    heads = [0] if pin_first else range(n)
    jobs = [(values, first, maximize, exact) for first in heads]

    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
            branches = list(pool.map(_scan_branch, *zip(*jobs)))
    else:
        branches = [_scan_branch(*job) for job in jobs]

    best = None
    for value, _, _ in branches:
        if _improves(value, best, maximize, exact):
            best = value
    if not exact:
        # report the true extreme among everything within tolerance
        close = [v for value, winners, _ in branches for v, _ in winners
                 if same_value(v, best)]
        best = max(close) if maximize else min(close)

    optima = sorted({entries for _, winners, _ in branches for v, entries in winners
                     if (v == best if exact else same_value(v, best))})
    explored = sum(count for _, _, count in branches)
    return OracleResult(
        objective=objective,
        optima=tuple(number_set.sequence(entries) for entries in optima),
        best_value=best,
        explored=explored,
        pinned_first=pin_first,
    )
