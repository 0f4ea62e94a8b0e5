"""
Favorable-interchange local search for VarSeq

Starting from any arrangement, keep applying moves that strictly increase f
until no pairwise interchange helps. A converged search only certifies that
no favorable interchange remains; it says nothing about global optimality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .construct import construct_optimal
from .core import NumberSet, Sequence, partial_sums, variance
from .transforms import (
    TransformKind, TransformStatus, TransformTrace,
    delta_f, interchange, sum_n1_transform, sum_n2_transform,
)
from .utils import strictly_greater


class Strategy(Enum):
    FIRST_IMPROVEMENT = 'first'
    BEST_IMPROVEMENT = 'best'
    TRANSFORMS_FIRST = 'transforms'


@dataclass(frozen=True)
class SearchReport:
    """Outcome of one local search run.

    `f_trajectory` starts with f(start) and gains one entry per step.
    `reached_closed_form` tells whether the end point is one of the two
    constructed optima.
    """

    start: Sequence
    end: Sequence
    steps: tuple
    f_trajectory: tuple
    converged: bool
    reached_closed_form: bool
    strategy: Strategy = Strategy.BEST_IMPROVEMENT


@dataclass(frozen=True)
class HitRate:
    runs: int
    hits: int

    @property
    def rate(self) -> float:
        return self.hits / self.runs if self.runs else 0.0


def _single_step(seq: Sequence, step) -> tuple:
    moved = interchange(seq, step.i, step.j)
    trace = TransformTrace(
        kind=TransformKind.SINGLE,
        applied=((step.i, step.j),),
        f_before=variance(seq),
        f_after=variance(moved),
        per_step=(step.delta_f,),
        status=TransformStatus.TRANSFORMED,
    )
    return moved, trace


def _first_improvement(seq: Sequence):
    stats = partial_sums(seq)
    for i in range(1, seq.n):
        for j in range(i + 1, seq.n + 1):
            step = delta_f(seq, i, j, stats)
            if step.favorable:
                return step
    return None


def _best_improvement(seq: Sequence):
    # ties keep the lexicographically smallest (i, j): only a strictly larger gain replaces
    stats = partial_sums(seq)
    best = None
    for i in range(1, seq.n):
        for j in range(i + 1, seq.n + 1):
            step = delta_f(seq, i, j, stats)
            if step.favorable and (best is None or strictly_greater(step.delta_f, best.delta_f)):
                best = step
    return best


def _improving_transform(seq: Sequence):
    for transform in (sum_n2_transform, sum_n1_transform):
        moved, trace = transform(seq)
        if trace.transformed and strictly_greater(trace.f_after, trace.f_before):
            return moved, trace
    return None


def local_search(seq: Sequence, strategy: Strategy = Strategy.BEST_IMPROVEMENT,
                 max_steps: Optional[int] = None) -> SearchReport:
    """Climb by favorable moves until none is left (or max_steps is hit).

    FIRST_IMPROVEMENT takes the first favorable (i,j) in lexicographic order,
    BEST_IMPROVEMENT the one with the largest gain, and TRANSFORMS_FIRST tries
    the sum-'n+2' and sum-'n+1' transforms before falling back to the best
    single interchange.
    """
    current = seq
    steps = []
    trajectory = [variance(seq)]
    converged = False

    while max_steps is None or len(steps) < max_steps:
        moved = None
        if strategy is Strategy.TRANSFORMS_FIRST:
            moved = _improving_transform(current)
        if moved is None:
            if strategy is Strategy.FIRST_IMPROVEMENT:
                step = _first_improvement(current)
            else:
                step = _best_improvement(current)
            if step is None:
                converged = True
                break
            moved = _single_step(current, step)
        current, trace = moved
        steps.append(trace)
        trajectory.append(trace.f_after)

    optima = {s.entries for s in construct_optimal(seq.provenance)}
    return SearchReport(
        start=seq,
        end=current,
        steps=tuple(steps),
        f_trajectory=tuple(trajectory),
        converged=converged,
        reached_closed_form=current.entries in optima,
        strategy=strategy,
    )


def random_start(number_set: NumberSet, seed: Optional[int] = None) -> Sequence:
    """A reproducible random arrangement."""
    entries = list(number_set.values)
    random.Random(seed).shuffle(entries)
    return number_set.sequence(entries)


def closed_form_hit_rate(number_set: NumberSet, strategy: Strategy,
                         starts: int, seed: Optional[int] = None) -> HitRate:
    """How often searches from random starts end on a constructed optimum."""
    rng = random.Random(seed)
    hits = 0
    for _ in range(starts):
        start = random_start(number_set, rng.getrandbits(64))
        if local_search(start, strategy).reached_closed_form:
            hits += 1
    return HitRate(runs=starts, hits=hits)
