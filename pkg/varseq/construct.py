"""
Closed-form variance-maximizing sequences
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import NamedTuple

from .core import NumberSet, Sequence
from .transforms import dual
from .utils import pair_bounds


class OptimalPair(NamedTuple):
    """The constructed optimum ending in a_2 and its dual starting a_1, a_2."""

    primary: Sequence
    dual: Sequence


@dataclass(frozen=True)
class InterleavingCheck:
    """Outcome of the interleaving test; truthy exactly when it holds."""

    holds: bool
    applicable: bool

    def __bool__(self):
        return self.holds


def construct_optimal(number_set: NumberSet) -> OptimalPair:
    """Build {a1, a3, a5, ..., a4, a2} and its dual {a1, a2, a4, ..., a5, a3}.

    Odd-ranked values ascend to the peak, even-ranked values descend back to
    a_2. The same rule covers odd and even n; for n <= 2 both sequences are
    the ascending order.
    """
    values = number_set.values
    primary = number_set.sequence(values[0::2] + values[1::2][::-1])
    return OptimalPair(primary, dual(primary))


def optimal_sequences(number_set: NumberSet) -> list:
    """The constructed optima without duplicates (one sequence when n <= 2)."""
    pair = construct_optimal(number_set)
    if pair.primary.entries == pair.dual.entries:
        return [pair.primary]
    return list(pair)


def check_interleaving(seq: Sequence) -> InterleavingCheck:
    """Check c_{n+2-k} < c_k < c_{n+1-k} around an optimum of the form c_1=a_1, c_n=a_2.

    For even n both inequalities are checked for 2 <= k <= n/2. For odd n the
    upper bound runs over 2 <= k <= floor(n/2) and the lower bound over
    2 <= k <= ceil(n/2). Sequences not of that form are not applicable and
    never hold.
    """
    n = seq.n
    values = seq.provenance.values
    if n < 2 or seq.c(1) != values[0] or seq.c(n) != values[1]:
        return InterleavingCheck(holds=False, applicable=False)

    below = operator.lt if seq.provenance.distinct else operator.le

    u, u_floor = pair_bounds(n)
    lower_ok = all(below(seq.c(n + 2 - k), seq.c(k)) for k in range(2, u + 1))
    upper_ok = all(below(seq.c(k), seq.c(n + 1 - k)) for k in range(2, u_floor + 1))
    return InterleavingCheck(holds=lower_ok and upper_ok, applicable=True)
