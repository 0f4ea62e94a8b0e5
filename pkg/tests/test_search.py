import pytest

from varseq.construct import construct_optimal
from varseq.core import Sequence, variance
from varseq.search import Strategy, closed_form_hit_rate, local_search, random_start
from varseq.transforms import TransformKind, delta_f


def _no_favorable_interchange(seq):
    return not any(delta_f(seq, i, j).favorable
                   for i in range(1, seq.n) for j in range(i + 1, seq.n + 1))


@pytest.mark.parametrize('strategy', list(Strategy))
def test_search_converges_monotonically(example_one, strategy):
    report = local_search(example_one, strategy)
    assert report.converged
    assert report.start is example_one
    assert report.f_trajectory[0] == variance(example_one)
    assert report.f_trajectory[-1] == variance(report.end)
    assert all(b > a for a, b in zip(report.f_trajectory, report.f_trajectory[1:]))
    assert len(report.f_trajectory) == len(report.steps) + 1
    assert _no_favorable_interchange(report.end)


def test_search_from_optimum_takes_no_steps(one_to_eight):
    start = construct_optimal(one_to_eight).primary
    report = local_search(start)
    assert report.steps == ()
    assert report.converged
    assert report.reached_closed_form


def test_transforms_first_uses_sum_n2_on_example_one(example_one):
    report = local_search(example_one, Strategy.TRANSFORMS_FIRST)
    assert report.steps[0].kind is TransformKind.SUM_N2


def test_max_steps_cap(example_one):
    report = local_search(example_one, Strategy.FIRST_IMPROVEMENT, max_steps=1)
    assert len(report.steps) == 1
    assert not report.converged


def test_best_improvement_takes_the_largest_gain(example_one):
    report = local_search(example_one, Strategy.BEST_IMPROVEMENT, max_steps=1)
    gains = [delta_f(example_one, i, j).delta_f
             for i in range(1, 8) for j in range(i + 1, 9)]
    assert report.steps[0].total_delta == max(gains)


def test_random_start_is_reproducible(one_to_eight):
    first = random_start(one_to_eight, seed=42)
    assert first.entries == random_start(one_to_eight, seed=42).entries
    assert sorted(first.entries) == list(one_to_eight.values)


def test_hit_rate(one_to_eight):
    rate = closed_form_hit_rate(one_to_eight, Strategy.BEST_IMPROVEMENT, starts=10, seed=7)
    assert rate.runs == 10
    assert 0 <= rate.hits <= 10
    assert rate.rate == rate.hits / 10


def test_hit_rate_with_no_runs(one_to_eight):
    assert closed_form_hit_rate(one_to_eight, Strategy.FIRST_IMPROVEMENT, starts=0).rate == 0.0


def test_float_search_terminates():
    seq = Sequence.from_values([0.3, 2.2, 1.1, 4.4, 0.9])
    report = local_search(seq, Strategy.FIRST_IMPROVEMENT)
    assert report.converged
    assert report.f_trajectory[-1] >= report.f_trajectory[0]


def test_single_value():
    report = local_search(Sequence.from_values([3]))
    assert report.converged and report.reached_closed_form


def test_search_moves_on_tiny_float_values():
    start = Sequence.from_values([4e-6, 3e-6, 2e-6, 1e-6])
    report = local_search(start, Strategy.BEST_IMPROVEMENT)
    assert report.steps
    assert report.converged
    assert report.f_trajectory[-1] > report.f_trajectory[0]
    assert _no_favorable_interchange(report.end)


def test_favorable_interchange_is_scale_free():
    small = Sequence.from_values([4e-6, 3e-6, 2e-6, 1e-6])
    large = Sequence.from_values([4.0, 3.0, 2.0, 1.0])
    for i in range(1, 4):
        for j in range(i + 1, 5):
            assert delta_f(small, i, j).favorable == delta_f(large, i, j).favorable
