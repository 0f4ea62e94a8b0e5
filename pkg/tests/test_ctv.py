import pytest

from varseq.core import Sequence, variance
from varseq.ctv import Dominance, ctv_compare, ctv_dominates, ctv_screen
from varseq.errors import MismatchedSets

from conftest import CTV_HIGH, CTV_LOW, EXAMPLE_ONE, EXAMPLE_ONE_IMAGE


@pytest.fixture
def ctv_pair():
    high = Sequence.from_values(CTV_HIGH)
    return high, high.with_entries(CTV_LOW)


def test_transform_links_the_pair(ctv_pair):
    high, low = ctv_pair
    assert variance(low) < variance(high)
    assert ctv_dominates(high, low) is Dominance.A_FIRST
    assert ctv_dominates(low, high) is Dominance.B_FIRST


def test_compare_names_the_better_candidate(ctv_pair):
    high, low = ctv_pair
    comparison = ctv_compare(low, high)
    assert comparison.verdict is Dominance.B_FIRST
    assert comparison.better_for_ctv == 'a'
    assert comparison.variance_a < comparison.variance_b


def test_unrelated_sequences_are_incomparable():
    a = Sequence.from_values([1, 2, 3, 4, 5])
    b = a.with_entries([2, 1, 3, 4, 5])
    assert ctv_dominates(a, b) is Dominance.INCOMPARABLE
    assert ctv_compare(a, b).better_for_ctv is None


def test_screen_keeps_the_pre_image(ctv_pair):
    high, low = ctv_pair
    survivors = ctv_screen([high, low])
    assert [s.entries for s in survivors] == [low.entries]


def test_screen_collapses_duplicates():
    seq = Sequence.from_values(EXAMPLE_ONE)
    survivors = ctv_screen([seq, seq, seq.with_entries(EXAMPLE_ONE_IMAGE)])
    assert [s.entries for s in survivors] == [seq.entries]


def test_screen_with_sum_n1():
    low = Sequence.from_values([1, 3, 2, 4])
    high = low.with_entries([1, 2, 3, 4])
    assert len(ctv_screen([low, high])) == 2
    assert [s.entries for s in ctv_screen([low, high], with_sum_n1=True)] == [low.entries]


def test_candidates_must_share_a_multiset():
    with pytest.raises(MismatchedSets):
        ctv_screen([Sequence.from_values([1, 2, 3]), Sequence.from_values([1, 2, 4])])
    with pytest.raises(MismatchedSets):
        ctv_dominates(Sequence.from_values([1, 2]), Sequence.from_values([1, 3]))


def test_screen_of_nothing():
    assert ctv_screen([]) == []
