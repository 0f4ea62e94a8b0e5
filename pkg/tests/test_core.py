import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from varseq.core import (
    NumberSet, Sequence, exact_numerator, float_variance,
    objective_key, partial_mean, partial_sums, variance,
)
from varseq.errors import IndexOutOfRange, InvalidNumberSet, MismatchedSets

from conftest import EXAMPLE_ONE


def test_number_set_sorts_and_reports_ranks():
    number_set = NumberSet((5, 1, 3))
    assert number_set.values == (1, 3, 5)
    assert number_set.n == 3
    assert number_set.a(1) == 1
    assert number_set.a(3) == 5
    assert number_set.distinct
    assert number_set.integral and number_set.exact


@pytest.mark.parametrize('values', [(), (0, 1), (-2, 3), (1, float('inf')), (1, float('nan')), (True, 2)])
def test_number_set_rejects_bad_values(values):
    with pytest.raises(InvalidNumberSet):
        NumberSet(values)


def test_invalid_number_set_is_a_value_error():
    with pytest.raises(ValueError):
        NumberSet(())


def test_ties_are_not_distinct():
    assert not NumberSet((1, 2, 2)).distinct


def test_rational_values_take_exact_path():
    number_set = NumberSet((Fraction(1, 2), 3))
    assert number_set.exact
    assert not number_set.integral
    assert not NumberSet((1.5, 2)).exact


def test_a_out_of_range():
    with pytest.raises(IndexOutOfRange):
        NumberSet((1, 2)).a(3)


def test_sequence_must_permute_its_set():
    number_set = NumberSet((1, 2, 3))
    with pytest.raises(MismatchedSets):
        number_set.sequence((1, 2, 2))
    with pytest.raises(MismatchedSets):
        number_set.sequence((1, 2))


def test_sequence_positions_are_one_based(example_one):
    assert example_one.c(1) == 1
    assert example_one.c(8) == 5
    with pytest.raises(IndexOutOfRange):
        example_one.c(0)
    with pytest.raises(IndexError):
        example_one.c(9)


def test_ranks_round_trip(example_one):
    assert example_one.ranks() == EXAMPLE_ONE
    assert example_one.order_spec() == '1,6,2,3,4,8,7,5'
    again = example_one.provenance.sequence_from_ranks(example_one.ranks())
    assert again.entries == example_one.entries


def test_ranks_with_ties_follow_first_appearance():
    seq = Sequence.from_values([2, 1, 2])
    assert seq.ranks() == [2, 1, 3]


def test_sequence_from_ranks_rejects_non_permutation():
    with pytest.raises(MismatchedSets):
        NumberSet((1, 2, 3)).sequence_from_ranks([1, 1, 2])


def test_example_one_statistics(example_one):
    stats = partial_sums(example_one)
    assert stats.sums == (1, 7, 9, 12, 16, 24, 31, 36)
    assert stats.mean == 17
    assert stats.variance == Fraction(263, 2)
    assert stats.exact_numerator == 8416
    assert stats.exact


def test_single_element_has_zero_variance():
    assert variance(Sequence.from_values([7])) == 0


def test_float_path_matches_exact_path():
    exact = variance(Sequence.from_values(EXAMPLE_ONE))
    approx = variance(Sequence.from_values([float(v) for v in EXAMPLE_ONE]))
    assert isinstance(approx, float)
    assert math.isclose(approx, 131.5, rel_tol=1e-12)
    assert float(exact) == approx


def test_objective_key(example_one):
    assert objective_key(example_one) == 8416
    assert objective_key(Sequence.from_values([1.0, 2.0])) == pytest.approx(1.0)


def test_partial_mean_windows(example_one):
    stats = partial_sums(example_one)
    assert partial_mean(stats, 3, 7) == Fraction(9 + 12 + 16 + 24, 4)
    assert partial_mean(stats, 1, 9) == stats.mean
    with pytest.raises(IndexOutOfRange):
        partial_mean(stats, 3, 3)
    with pytest.raises(IndexOutOfRange):
        partial_mean(stats, 1, 10)


@given(st.lists(st.integers(min_value=1, max_value=1000), min_size=1, max_size=15))
def test_exact_numerator_matches_definition(values):
    n = len(values)
    sums = []
    running = 0
    for v in values:
        running += v
        sums.append(running)
    mean = Fraction(sum(sums), n)
    definitional = sum((Fraction(s) - mean) ** 2 for s in sums) / n
    assert exact_numerator(values) == definitional * n * n
    assert variance(Sequence.from_values(values)) == definitional


@given(st.lists(st.floats(min_value=0.01, max_value=1e3), min_size=1, max_size=12))
def test_float_variance_is_nonnegative(values):
    assert float_variance(values) >= 0


positive_lists = st.lists(st.integers(min_value=1, max_value=500), min_size=2, max_size=10)


@given(positive_lists)
def test_partial_mean_increases_with_either_endpoint(values):
    stats = partial_sums(Sequence.from_values(values))
    n = len(values)
    for j in range(2, n + 2):
        means = [partial_mean(stats, i, j) for i in range(1, j)]
        assert all(a < b for a, b in zip(means, means[1:]))
    for i in range(1, n + 1):
        means = [partial_mean(stats, i, j) for j in range(i + 1, n + 2)]
        assert all(a < b for a, b in zip(means, means[1:]))


@given(positive_lists, st.data())
def test_adjacent_windows_mix_into_their_union(values, data):
    stats = partial_sums(Sequence.from_values(values))
    n = len(values)
    i, j, k = sorted(data.draw(st.lists(st.integers(1, n + 1), min_size=3, max_size=3, unique=True)))
    mixed = ((j - i) * partial_mean(stats, i, j) + (k - j) * partial_mean(stats, j, k)) / (k - i)
    assert mixed == partial_mean(stats, i, k)


@given(positive_lists)
def test_later_windows_dominate(values):
    stats = partial_sums(Sequence.from_values(values))
    windows = [(i, j) for i in range(1, len(values) + 1) for j in range(i + 1, len(values) + 2)]
    for i, j in windows:
        for k, l in windows:
            if i <= k and j <= l and (i, j) != (k, l):
                assert partial_mean(stats, i, j) < partial_mean(stats, k, l)
