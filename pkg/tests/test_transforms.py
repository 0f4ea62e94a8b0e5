from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from varseq.core import Sequence, variance
from varseq.errors import IndexOutOfRange
from varseq.transforms import (
    TransformKind, TransformStatus,
    delta_f, dual, dual_transform, interchange, is_favorable,
    sum_n1_transform, sum_n2_increment_terms, sum_n2_split, sum_n2_transform,
)

from conftest import EXAMPLE_ONE_IMAGE

positive_lists = st.lists(st.integers(min_value=1, max_value=100), min_size=1, max_size=12)


def test_interchange_swaps_positions(example_one):
    assert interchange(example_one, 3, 7).entries == (1, 6, 7, 3, 4, 8, 2, 5)


@pytest.mark.parametrize('i, j', [(0, 2), (3, 3), (5, 2), (1, 9)])
def test_interchange_rejects_bad_pairs(example_one, i, j):
    with pytest.raises(IndexOutOfRange):
        interchange(example_one, i, j)


def test_delta_f_parts(example_one):
    step = delta_f(example_one, 3, 7)
    assert step.delta == 5
    assert step.d1 == Fraction(1, 2) * Fraction(1, 2)
    assert step.d1 > 0
    assert step.delta_f == variance(interchange(example_one, 3, 7)) - variance(example_one)


def test_vertex_is_a_neutral_interchange(example_one):
    step = delta_f(example_one, 2, 5)
    vertex = step.vertex
    assert step.d1 * vertex * vertex + step.d2 * vertex == 0


def test_is_favorable(example_one):
    assert is_favorable(example_one, 3, 7) == (delta_f(example_one, 3, 7).delta_f > 0)


@given(positive_lists, st.data())
def test_delta_f_matches_recomputation(values, data):
    seq = Sequence.from_values(values)
    if seq.n < 2:
        return
    i = data.draw(st.integers(min_value=1, max_value=seq.n - 1))
    j = data.draw(st.integers(min_value=i + 1, max_value=seq.n))
    assert delta_f(seq, i, j).delta_f == variance(interchange(seq, i, j)) - variance(seq)


def test_dual_of_example_one(example_one):
    assert dual(example_one).entries == (1, 5, 7, 8, 4, 3, 2, 6)


@given(positive_lists)
def test_dual_keeps_variance_and_is_an_involution(values):
    seq = Sequence.from_values(values)
    assert variance(dual(seq)) == variance(seq)
    assert dual(dual(seq)).entries == seq.entries


def test_dual_transform_agrees_with_dual(example_one):
    result, trace = dual_transform(example_one)
    assert result.entries == dual(example_one).entries
    assert trace.kind is TransformKind.DUAL
    assert trace.applied == ((2, 8), (3, 7), (4, 6))
    assert trace.total_delta == 0


def test_dual_transform_short_sequence_is_no_op():
    seq = Sequence.from_values([1, 2])
    result, trace = dual_transform(seq)
    assert result is seq
    assert trace.status is TransformStatus.NO_OP


def test_sum_n2_on_example_one(example_one):
    result, trace = sum_n2_transform(example_one)
    assert result.entries == tuple(EXAMPLE_ONE_IMAGE)
    assert trace.status is TransformStatus.TRANSFORMED
    assert trace.index_set == (3, 4)
    assert trace.applied == ((3, 7), (4, 6))
    assert trace.f_before == Fraction(263, 2)
    assert trace.f_after == Fraction(8476, 64)
    assert trace.total_delta == Fraction(15, 16)
    assert sum(trace.per_step) == trace.total_delta


def test_sum_n2_split(example_one):
    assert sum_n2_split(example_one) == ([3, 4], [2], [])


def test_sum_n2_gate_needs_both_sides():
    seq = Sequence.from_values([1, 2, 3, 4, 5])
    result, trace = sum_n2_transform(seq)
    assert trace.status is TransformStatus.GATE_NOT_MET
    assert result is seq
    assert trace.total_delta == 0
    assert sum_n2_increment_terms(seq) is None


def test_sum_n2_ties_do_not_open_the_gate():
    # pair (2,5) ascends, pair (3,4) is tied
    seq = Sequence.from_values([1, 2, 4, 4, 3])
    assert sum_n2_split(seq) == ([2], [], [3])
    assert sum_n2_transform(seq)[1].status is TransformStatus.GATE_NOT_MET


def test_sum_n2_too_short():
    for values in ([3], [1, 2]):
        assert sum_n2_transform(Sequence.from_values(values))[1].status is TransformStatus.GATE_NOT_MET


def test_sum_n2_increment_terms_on_example_one(example_one):
    cross, residual = sum_n2_increment_terms(example_one)
    assert cross == 0
    assert residual == Fraction(60, 64)


@given(st.permutations(list(range(1, 10))))
def test_sum_n2_is_improving(entries):
    seq = Sequence.from_values(entries)
    result, trace = sum_n2_transform(seq)
    if not trace.transformed:
        return
    assert trace.f_after > trace.f_before
    assert sum_n2_split(result)[0] == []
    cross, residual = sum_n2_increment_terms(seq)
    assert cross == 0
    assert residual == trace.total_delta


def test_sum_n1_flips_descending_pairs():
    seq = Sequence.from_values([1, 3, 2, 4])
    result, trace = sum_n1_transform(seq)
    assert result.entries == (1, 2, 3, 4)
    assert trace.index_set == (2,)
    assert trace.f_before == Fraction(171, 16)
    assert trace.f_after == Fraction(184, 16)


def test_sum_n1_no_op():
    seq = Sequence.from_values([1, 2, 3, 4, 5])
    result, trace = sum_n1_transform(seq)
    assert result is seq
    assert trace.status is TransformStatus.NO_OP


@given(st.permutations(list(range(1, 9))))
def test_sum_n1_is_improving(entries):
    seq = Sequence.from_values(entries)
    result, trace = sum_n1_transform(seq)
    if trace.transformed:
        assert trace.f_after > trace.f_before
        n = seq.n
        assert all(result.c(k) < result.c(n + 1 - k) for k in range(2, n // 2 + 1))


def test_float_inputs_use_tolerance():
    seq = Sequence.from_values([0.1, 0.2, 0.3, 0.4])
    step = delta_f(seq, 1, 4)
    assert step.delta_f == pytest.approx(variance(interchange(seq, 1, 4)) - variance(seq))
