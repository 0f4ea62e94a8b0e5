"""
Completion time variance (CTV) screening for VarSeq

CTV minimizes the same variance of partial sums that the rest of the
package maximizes, so every improving transform reads backwards here: when
B is the sum-'n+2' transform of A, f(B) > f(A) and A is the better CTV
candidate.

The screening procedure is a pairwise dominance filter over the given
candidates. It is one way to put the transform to work on CTV, not a CTV
solver.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .core import Number, Sequence, variance
from .errors import MismatchedSets
from .transforms import sum_n1_transform, sum_n2_transform


class Dominance(Enum):
    """Which sequence ranks first by variance.

    A_FIRST: A is the transform of B, so f(A) > f(B) and B is better for CTV.
    B_FIRST: B is the transform of A, so f(B) > f(A) and A is better for CTV.
    """

    A_FIRST = 'a-first'
    B_FIRST = 'b-first'
    INCOMPARABLE = 'incomparable'


@dataclass(frozen=True)
class CtvComparison:
    """Dominance verdict plus the raw variances to fall back on."""

    verdict: Dominance
    variance_a: Number
    variance_b: Number

    @property
    def better_for_ctv(self) -> Optional[str]:
        if self.verdict is Dominance.B_FIRST:
            return 'a'
        if self.verdict is Dominance.A_FIRST:
            return 'b'
        return None


def _check_same_set(sequences) -> None:
    if not sequences:
        return
    reference = Counter(sequences[0].entries)
    for seq in sequences[1:]:
        if Counter(seq.entries) != reference:
            raise MismatchedSets("CTV candidates must permute the same multiset")


def _images(seq: Sequence, with_sum_n1: bool) -> list:
    """Entries of every sequence the enabled transforms turn seq into."""
    images = []
    transforms = (sum_n2_transform, sum_n1_transform) if with_sum_n1 else (sum_n2_transform,)
    for transform in transforms:
        moved, trace = transform(seq)
        if trace.transformed:
            images.append(moved.entries)
    return images


def ctv_dominates(seq_a: Sequence, seq_b: Sequence, with_sum_n1: bool = False) -> Dominance:
    """Decide through the sum-'n+2' transform which of two arrangements has larger f.

    With `with_sum_n1` the sum-'n+1' transform is also accepted as a link.
    """
    _check_same_set([seq_a, seq_b])
    if seq_b.entries in _images(seq_a, with_sum_n1):
        return Dominance.B_FIRST
    if seq_a.entries in _images(seq_b, with_sum_n1):
        return Dominance.A_FIRST
    return Dominance.INCOMPARABLE


def ctv_compare(seq_a: Sequence, seq_b: Sequence, with_sum_n1: bool = False) -> CtvComparison:
    return CtvComparison(
        verdict=ctv_dominates(seq_a, seq_b, with_sum_n1),
        variance_a=variance(seq_a),
        variance_b=variance(seq_b),
    )


def ctv_screen(candidates, with_sum_n1: bool = False) -> list:
    """Drop every candidate that is the transform of another candidate.

    Such a candidate has strictly larger variance than its pre-image, so it
    cannot be the CTV minimizer; the minimum-variance candidates always
    survive. Duplicates are collapsed, first occurrence kept.
    """
    candidates = list(candidates)
    _check_same_set(candidates)

    unique = []
    seen = set()
    for seq in candidates:
        if seq.entries not in seen:
            seen.add(seq.entries)
            unique.append(seq)

    dominated = set()
    for seq in unique:
        dominated.update(image for image in _images(seq, with_sum_n1) if image in seen)
    return [seq for seq in unique if seq.entries not in dominated]
