"""
Interchange calculus for VarSeq

Closed-form change of f under an (i,j)-interchange, the favorability test,
the dual sequence and the two pair-flipping transforms (sum-'n+2' over pairs
(k, n+2-k) and sum-'n+1' over pairs (k, n+1-k)).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .core import Number, Sequence, partial_mean, partial_sums, variance
from .errors import IndexOutOfRange
from .utils import divide, is_exact, pair_bounds, strictly_greater


class TransformKind(Enum):
    DUAL = 'dual'
    SUM_N2 = 'sum-n2'
    SUM_N1 = 'sum-n1'
    SINGLE = 'single'


class TransformStatus(Enum):
    TRANSFORMED = 'transformed'
    NO_OP = 'no-op'
    GATE_NOT_MET = 'gate-not-met'


@dataclass(frozen=True)
class InterchangeDelta:
    """Delta f of an (i,j)-interchange as phi(delta) = d1*delta^2 + d2*delta.

    Attributes:
        i, j: 1-based positions, i < j
        delta: c_j - c_i
        d1: (j-i)/n * (1 - (j-i)/n), positive for every valid pair
        d2: 2(j-i)/n * (mu_ij - mean)
        delta_f: f(C') - f(C)
    """

    i: int
    j: int
    delta: Number
    d1: Number
    d2: Number
    delta_f: Number

    @property
    def vertex(self) -> Number:
        """The non-zero root -d2/d1 of phi; the interchange is neutral there."""
        return -self.d2 / self.d1

    @property
    def favorable(self) -> bool:
        if is_exact(self.delta_f):
            return self.delta_f > 0
        terms = abs(self.d1 * self.delta * self.delta) + abs(self.d2 * self.delta)
        return strictly_greater(self.delta_f, 0, scale=terms)


@dataclass(frozen=True)
class TransformTrace:
    """Record of a transform: the interchanges applied and f along the way.

    `per_step[m]` is the change in f caused by `applied[m]`, evaluated on the
    sequence produced by the previous steps.
    """

    kind: TransformKind
    applied: tuple
    f_before: Number
    f_after: Number
    per_step: tuple
    status: TransformStatus
    index_set: tuple = ()

    @property
    def total_delta(self) -> Number:
        return self.f_after - self.f_before

    @property
    def transformed(self) -> bool:
        return self.status is TransformStatus.TRANSFORMED


def _check_pair(seq: Sequence, i: int, j: int) -> None:
    if not 1 <= i < j <= seq.n:
        raise IndexOutOfRange(f"interchange ({i},{j}) needs 1 <= i < j <= {seq.n}")


def interchange(seq: Sequence, i: int, j: int) -> Sequence:
    """Swap positions i and j."""
    _check_pair(seq, i, j)
    entries = list(seq.entries)
    entries[i - 1], entries[j - 1] = entries[j - 1], entries[i - 1]
    return seq.with_entries(entries)


def delta_f(seq: Sequence, i: int, j: int, stats=None) -> InterchangeDelta:
    """Closed-form f(C') - f(C) for the (i,j)-interchange of seq.

    `stats` may be passed in when the caller already holds partial_sums(seq).
    """
    _check_pair(seq, i, j)
    if stats is None:
        stats = partial_sums(seq)
    exact = stats.exact
    n = seq.n
    span = j - i
    ratio = divide(span, n, exact)
    delta = seq.c(j) - seq.c(i)
    d1 = ratio * (1 - ratio)
    d2 = 2 * ratio * (partial_mean(stats, i, j) - stats.mean)
    return InterchangeDelta(
        i=i, j=j, delta=delta, d1=d1, d2=d2,
        delta_f=d1 * delta * delta + d2 * delta,
    )


def is_favorable(seq: Sequence, i: int, j: int) -> bool:
    """True iff the (i,j)-interchange strictly increases f."""
    return delta_f(seq, i, j).favorable


def dual(seq: Sequence) -> Sequence:
    """{c_1, c_n, c_{n-1}, ..., c_2}; f is unchanged."""
    head, tail = seq.entries[:1], seq.entries[1:]
    return seq.with_entries(head + tail[::-1])


def _apply_pairs(seq: Sequence, pairs, kind: TransformKind, index_set) -> tuple:
    """Apply interchanges in order, tracking the per-step change in f."""
    f_before = variance(seq)
    current = seq
    per_step = []
    for i, j in pairs:
        step = delta_f(current, i, j)
        per_step.append(step.delta_f)
        current = interchange(current, i, j)
    trace = TransformTrace(
        kind=kind,
        applied=tuple(pairs),
        f_before=f_before,
        f_after=variance(current),
        per_step=tuple(per_step),
        status=TransformStatus.TRANSFORMED,
        index_set=tuple(index_set),
    )
    return current, trace


def _unchanged(seq: Sequence, kind: TransformKind, status: TransformStatus) -> tuple:
    f = variance(seq)
    return seq, TransformTrace(kind=kind, applied=(), f_before=f, f_after=f,
                               per_step=(), status=status)


def dual_transform(seq: Sequence) -> tuple:
    """The dual expressed as its (k, n+2-k) interchanges, with a trace."""
    u, _ = pair_bounds(seq.n)
    pairs = [(k, seq.n + 2 - k) for k in range(2, u + 1)]
    if not pairs:
        return _unchanged(seq, TransformKind.DUAL, TransformStatus.NO_OP)
    return _apply_pairs(seq, pairs, TransformKind.DUAL, [i for i, _ in pairs])


def sum_n2_split(seq: Sequence) -> tuple:
    """Partition 2..u into (I, complement-with-strict->, ties) for pairs (k, n+2-k)."""
    n = seq.n
    u, _ = pair_bounds(n)
    lower, upper, ties = [], [], []
    for k in range(2, u + 1):
        left, right = seq.c(k), seq.c(n + 2 - k)
        if left < right:
            lower.append(k)
        elif left > right:
            upper.append(k)
        else:
            ties.append(k)
    return lower, upper, ties


def sum_n2_transform(seq: Sequence) -> tuple:
    """Flip every pair (k, n+2-k) with c_k < c_{n+2-k}, 2 <= k <= ceil(n/2).

    Only defined when the pairs are mixed: if no pair is ascending, or no
    pair is descending, the flip would be the dual (or nothing) and the
    trace reports GATE_NOT_MET with the sequence returned unchanged.
    """
    lower, upper, _ = sum_n2_split(seq)
    if not lower or not upper:
        return _unchanged(seq, TransformKind.SUM_N2, TransformStatus.GATE_NOT_MET)
    pairs = [(k, seq.n + 2 - k) for k in lower]
    return _apply_pairs(seq, pairs, TransformKind.SUM_N2, lower)


def sum_n1_transform(seq: Sequence) -> tuple:
    """Flip every pair (k, n+1-k) with c_k > c_{n+1-k}, 2 <= k <= floor(n/2)."""
    n = seq.n
    _, u_floor = pair_bounds(n)
    index_set = [k for k in range(2, u_floor + 1) if seq.c(k) > seq.c(n + 1 - k)]
    if not index_set:
        return _unchanged(seq, TransformKind.SUM_N1, TransformStatus.NO_OP)
    pairs = [(k, n + 1 - k) for k in index_set]
    return _apply_pairs(seq, pairs, TransformKind.SUM_N1, index_set)


def sum_n2_increment_terms(seq: Sequence) -> Optional[tuple]:
    """Split the sum-'n+2' increment into (cross_total, residual_total).

    Both totals are computed from the untransformed sequence. The cross terms
    pair two flipped indices against each other and cancel to zero; the
    residual terms pair each flipped index with the unflipped ones and add up
    to the whole increment f(after) - f(before). Returns None when the gate
    is not met.
    """
    lower, upper, _ = sum_n2_split(seq)
    if not lower or not upper:
        return None
    n = seq.n
    u, _ = pair_bounds(n)
    flipped = set(lower)
    gap = {k: seq.c(k) - seq.c(n + 2 - k) for k in range(2, u + 1)}
    cross = residual = 0
    for i in lower:
        weight = -gap[i]
        for k in range(2, i):
            term = (n + 2 - 2 * i) * (k - 1) * (-gap[k] if k in flipped else gap[k])
            if k in flipped:
                cross += weight * term
            else:
                residual += weight * term
        for k in range(i + 1, u + 1):
            term = (i - 1) * (n + 2 - 2 * k) * gap[k]
            if k in flipped:
                cross += weight * term
            else:
                residual += weight * term
    scale = divide(2, n * n, seq.exact)
    return scale * cross, scale * residual
