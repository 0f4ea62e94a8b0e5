"""
Number sets, sequences and partial-sum statistics for VarSeq

All positions exposed by this module are 1-based. Integer and Fraction
inputs take the exact path (variance is a Fraction); anything else is
evaluated in IEEE doubles.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, Optional, Union

from .errors import IndexOutOfRange, InvalidNumberSet, MismatchedSets
from .utils import divide, is_exact

Number = Union[int, Fraction, float]


@dataclass(frozen=True)
class NumberSet:
    """The multiset A, stored ascending.

    Attributes:
        values: the numbers in ascending order
        distinct: True when the values strictly ascend (no ties)
    """

    values: tuple

    def __post_init__(self):
        values = tuple(self.values)
        if not values:
            raise InvalidNumberSet("a number set needs at least one value")
        for value in values:
            if isinstance(value, bool) or not isinstance(value, (int, float, Fraction)):
                raise InvalidNumberSet(f"unsupported value {value!r}")
            if not is_exact(value) and not math.isfinite(value):
                raise InvalidNumberSet(f"value {value!r} is not finite")
            if value <= 0:
                raise InvalidNumberSet(f"value {value!r} is not positive")
        object.__setattr__(self, 'values', tuple(sorted(values)))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def distinct(self) -> bool:
        return all(a < b for a, b in zip(self.values, self.values[1:]))

    @property
    def exact(self) -> bool:
        return all(is_exact(v) for v in self.values)

    @property
    def integral(self) -> bool:
        return all(isinstance(v, int) for v in self.values)

    def a(self, k: int) -> Number:
        """The k-th smallest value (1-based)."""
        if not 1 <= k <= self.n:
            raise IndexOutOfRange(f"a_{k} does not exist for n={self.n}")
        return self.values[k - 1]

    def sequence(self, entries: Iterable[Number]) -> "Sequence":
        return Sequence(tuple(entries), self)

    def sequence_from_ranks(self, ranks: Iterable[int]) -> "Sequence":
        """Select a permutation by 1-based ranks into the sorted values."""
        ranks = list(ranks)
        if sorted(ranks) != list(range(1, self.n + 1)):
            raise MismatchedSets(f"ranks {ranks} are not a permutation of 1..{self.n}")
        return Sequence(tuple(self.values[r - 1] for r in ranks), self)

    def ascending(self) -> "Sequence":
        return Sequence(self.values, self)


@dataclass(frozen=True)
class Sequence:
    """One arrangement C of a NumberSet; c_1..c_n are read with `c(k)`."""

    entries: tuple
    provenance: NumberSet

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, 'entries', entries)
        if len(entries) != self.provenance.n:
            raise MismatchedSets(
                f"sequence has {len(entries)} entries but the set has {self.provenance.n}")
        if Counter(entries) != Counter(self.provenance.values):
            raise MismatchedSets("sequence is not a permutation of its number set")

    @classmethod
    def from_values(cls, values: Iterable[Number]) -> "Sequence":
        values = tuple(values)
        return cls(values, NumberSet(values))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def exact(self) -> bool:
        return self.provenance.exact

    def c(self, k: int) -> Number:
        if not 1 <= k <= self.n:
            raise IndexOutOfRange(f"position {k} is outside 1..{self.n}")
        return self.entries[k - 1]

    def with_entries(self, entries: Iterable[Number]) -> "Sequence":
        return Sequence(tuple(entries), self.provenance)

    def ranks(self) -> list:
        """1-based ranks of the entries; tied values are ranked by first appearance."""
        pending = {}
        for rank, value in enumerate(self.provenance.values, start=1):
            pending.setdefault(value, []).append(rank)
        return [pending[value].pop(0) for value in self.entries]

    def order_spec(self) -> str:
        return ','.join(str(r) for r in self.ranks())

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class PartialSumStats:
    """Partial sums s_1..s_n of a sequence with their mean and variance f(C).

    `exact_numerator` is n^2 f(C) = n*sum(s_k^2) - (sum s_k)^2, filled on the
    exact path (an int when every input is an int).
    """

    sums: tuple
    mean: Number
    variance: Number
    exact_numerator: Optional[Number] = None

    @property
    def n(self) -> int:
        return len(self.sums)

    @property
    def exact(self) -> bool:
        return self.exact_numerator is not None


def exact_numerator(entries) -> Number:
    """n^2 f for a run of exact entries, without building any objects."""
    n = len(entries)
    running = total = squares = 0
    for c in entries:
        running += c
        total += running
        squares += running * running
    return n * squares - total * total


def float_variance(entries) -> float:
    """Definitional (two-pass) variance of the partial sums in doubles."""
    sums = list(accumulate(float(c) for c in entries))
    mean = math.fsum(sums) / len(sums)
    return math.fsum((s - mean) ** 2 for s in sums) / len(sums)


def partial_sums(seq: Sequence) -> PartialSumStats:
    """Partial sums, their mean and the variance f(C) of a sequence."""
    n = seq.n
    sums = tuple(accumulate(seq.entries))
    if seq.exact:
        total = sum(sums)
        numerator = n * sum(s * s for s in sums) - total * total
        return PartialSumStats(
            sums=sums,
            mean=Fraction(total) / n,
            variance=Fraction(numerator) / (n * n),
            exact_numerator=numerator,
        )
    mean = math.fsum(sums) / n
    variance = math.fsum((s - mean) ** 2 for s in sums) / n
    return PartialSumStats(sums=sums, mean=mean, variance=variance)


def variance(seq: Sequence) -> Number:
    """f(C) = (1/n) sum s_k^2 - mean^2."""
    return partial_sums(seq).variance


def objective_key(seq: Sequence) -> Number:
    """Comparison key for f: the exact numerator, or the float variance."""
    if seq.exact:
        return exact_numerator(seq.entries)
    return float_variance(seq.entries)


def partial_mean(stats: PartialSumStats, i: int, j: int) -> Number:
    """mu_ij: the mean of s_i..s_{j-1}, for 1 <= i < j <= n+1."""
    if not 1 <= i < j <= stats.n + 1:
        raise IndexOutOfRange(f"partial mean ({i},{j}) needs 1 <= i < j <= {stats.n + 1}")
    window = stats.sums[i - 1:j - 1]
    if stats.exact:
        return divide(sum(window), j - i, exact=True)
    return math.fsum(window) / (j - i)
