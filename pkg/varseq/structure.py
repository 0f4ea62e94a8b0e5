"""
Shape predicates and necessary conditions for a variance-maximizing sequence
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .core import Sequence, partial_mean, partial_sums
from .transforms import delta_f
from .utils import divide


class ViolationKind(Enum):
    FIRST_NOT_MIN = 'first-not-min'
    LAST_IS_MAX = 'last-is-max'
    PARTIAL_MEAN_ORDER = 'partial-mean-order'
    NOT_WEDGE_SHAPED = 'not-wedge-shaped'


@dataclass(frozen=True)
class Violation:
    """A failed necessary condition and an interchange that improves on it."""

    kind: ViolationKind
    witness: Optional[tuple]
    detail: str


def _monotone(values, ascending, strict):
    pairs = zip(values, values[1:])
    if ascending:
        return all(a < b if strict else a <= b for a, b in pairs)
    return all(a > b if strict else a >= b for a, b in pairs)


def is_wedge_shaped(seq: Sequence) -> bool:
    """Ascending up to the largest element, descending after it."""
    entries = seq.entries
    peak = entries.index(max(entries))
    strict = seq.provenance.distinct
    return (_monotone(entries[:peak + 1], True, strict)
            and _monotone(entries[peak:], False, strict))


def is_v_shaped(seq: Sequence) -> bool:
    """Descending down to the smallest element, ascending after it."""
    entries = seq.entries
    trough = entries.index(min(entries))
    strict = seq.provenance.distinct
    return (_monotone(entries[:trough + 1], False, strict)
            and _monotone(entries[trough:], True, strict))


def last_pair_gain(seq: Sequence):
    """Closed form of delta f for swapping the last two positions.

    Valid for any sequence; it is positive whenever c_n is the maximum,
    n > 3 and the values are distinct.
    """
    n = seq.n
    if n < 2:
        return 0
    exact = seq.exact
    c = seq.c
    weighted = sum((k - 1) * c(k) for k in range(1, n - 1))
    inner = divide(weighted, n, exact) + divide((n - 3) * (c(n) + c(n - 1)), 2 * n, exact)
    return divide(2 * (c(n) - c(n - 1)), n, exact) * inner


def optimum_form(seq: Sequence) -> Optional[str]:
    """'head' for c_1=a_1, c_2=a_2; 'tail' for c_1=a_1, c_n=a_2; else None.

    When n=2 both hold and 'head' is reported.
    """
    values = seq.provenance.values
    if seq.n < 2 or seq.c(1) != values[0]:
        return None
    if seq.c(2) == values[1]:
        return 'head'
    if seq.c(seq.n) == values[1]:
        return 'tail'
    return None


def _partial_mean_witnesses(seq: Sequence, stats) -> list:
    """Scan both sides of the maximum for a partial mean on the wrong side of the mean."""
    n = seq.n
    peak = seq.entries.index(max(seq.entries)) + 1
    if not 1 < peak < n:
        return []
    found = []
    mean = stats.mean

    # left of the peak every window mean must sit below the overall mean
    left = None
    for i in range(1, peak):
        for j in range(i + 1, peak + 1):
            if partial_mean(stats, i, j) >= mean and seq.c(i) < seq.c(peak):
                left = (i, peak, j)
                break
        if left:
            break
    if left:
        i, k, j = left
        found.append(Violation(
            ViolationKind.PARTIAL_MEAN_ORDER, (i, k),
            f"mu({i},{j}) is not below the mean left of the maximum at position {k}"))

    right = None
    for i in range(peak, n):
        for j in range(i + 1, n + 1):
            if partial_mean(stats, i, j) <= mean and seq.c(j) < seq.c(peak):
                right = (peak, j, i)
                break
        if right:
            break
    if right:
        k, j, i = right
        found.append(Violation(
            ViolationKind.PARTIAL_MEAN_ORDER, (k, j),
            f"mu({i},{j}) is not above the mean right of the maximum at position {k}"))
    return found


def _best_interchange(seq: Sequence, stats):
    best = None
    for i in range(1, seq.n):
        for j in range(i + 1, seq.n + 1):
            step = delta_f(seq, i, j, stats)
            if step.favorable and (best is None or step.delta_f > best.delta_f):
                best = step
    return best


def violated_necessary_conditions(seq: Sequence) -> list:
    """Every necessary-for-optimality condition seq fails, with a witness.

    Each witness is an interchange with strictly positive delta f. An empty
    list means no condition failed; it does not prove optimality.
    """
    n = seq.n
    values = seq.provenance.values
    stats = partial_sums(seq)
    violations = []

    if seq.c(1) != values[0]:
        j = seq.entries.index(values[0]) + 1
        violations.append(Violation(
            ViolationKind.FIRST_NOT_MIN, (1, j),
            f"c_1={seq.c(1)} is not the smallest value {values[0]} (found at position {j})"))

    if n > 3 and seq.c(n) == values[-1]:
        if delta_f(seq, n - 1, n, stats).favorable:
            violations.append(Violation(
                ViolationKind.LAST_IS_MAX, (n - 1, n),
                f"c_n={seq.c(n)} is the largest value"))

    violations.extend(v for v in _partial_mean_witnesses(seq, stats)
                      if delta_f(seq, *v.witness, stats).favorable)

    if not is_wedge_shaped(seq):
        best = _best_interchange(seq, stats)
        violations.append(Violation(
            ViolationKind.NOT_WEDGE_SHAPED,
            (best.i, best.j) if best else None,
            "entries do not ascend to the maximum and descend after it"))

    return violations
