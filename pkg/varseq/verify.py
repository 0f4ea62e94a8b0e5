"""
Property suite run by `VarSeq.py verify`

Each check returns a PropertyCheck; nothing here raises on a failed
property, failures are reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .construct import check_interleaving, construct_optimal, optimal_sequences
from .core import Sequence, variance
from .errors import InstanceTooLarge
from .oracle import Objective, brute_force
from .search import Strategy, local_search
from .structure import is_wedge_shaped, violated_necessary_conditions
from .transforms import (
    delta_f, dual, interchange, sum_n1_transform, sum_n2_increment_terms,
    sum_n2_split, sum_n2_transform,
)
from .utils import pair_bounds, same_value, strictly_greater


class CheckStatus(Enum):
    PASS = 'pass'
    FAIL = 'fail'
    SKIP = 'skip'


@dataclass(frozen=True)
class PropertyCheck:
    name: str
    status: CheckStatus
    detail: str


def _result(name, ok, detail_ok, detail_fail):
    if ok:
        return PropertyCheck(name, CheckStatus.PASS, detail_ok)
    return PropertyCheck(name, CheckStatus.FAIL, detail_fail)


def check_dual_invariance(seq: Sequence) -> PropertyCheck:
    f, f_dual = variance(seq), variance(dual(seq))
    return _result('dual invariance', same_value(f, f_dual),
                   'f(C) equals f of its dual',
                   f'f(C)={f} but f(dual)={f_dual}')


def check_delta_consistency(seq: Sequence) -> PropertyCheck:
    base = variance(seq)
    mismatches = []
    pairs = 0
    for i in range(1, seq.n):
        for j in range(i + 1, seq.n + 1):
            pairs += 1
            predicted = delta_f(seq, i, j).delta_f
            actual = variance(interchange(seq, i, j)) - base
            if not same_value(predicted, actual, scale=base):
                mismatches.append((i, j))
    return _result('closed-form delta f', not mismatches,
                   f'{pairs} interchanges match recomputation',
                   f'mismatch at {mismatches[:5]}')


def check_sum_n2(seq: Sequence) -> PropertyCheck:
    result, trace = sum_n2_transform(seq)
    if not trace.transformed:
        return PropertyCheck("sum-'n+2' transform", CheckStatus.PASS, 'gate not met; sequence unchanged')
    lower, _, _ = sum_n2_split(result)
    cross, residual = sum_n2_increment_terms(seq)
    problems = []
    if not strictly_greater(trace.f_after, trace.f_before):
        problems.append('f did not increase')
    if lower:
        problems.append(f'pairs {lower} still ascending')
    if not same_value(cross, 0, scale=trace.f_before):
        problems.append(f'cross terms sum to {cross}')
    if not same_value(residual, trace.total_delta, scale=trace.f_before):
        problems.append(f'residual {residual} != increment {trace.total_delta}')
    return _result("sum-'n+2' transform", not problems,
                   f'I={list(trace.index_set)}, f increased by {trace.total_delta}',
                   '; '.join(problems))


def check_sum_n1(seq: Sequence) -> PropertyCheck:
    result, trace = sum_n1_transform(seq)
    if not trace.transformed:
        return PropertyCheck("sum-'n+1' transform", CheckStatus.PASS, 'nothing to flip; sequence unchanged')
    _, u_floor = pair_bounds(seq.n)
    remaining = [k for k in range(2, u_floor + 1) if result.c(k) > result.c(seq.n + 1 - k)]
    problems = []
    if not strictly_greater(trace.f_after, trace.f_before):
        problems.append('f did not increase')
    if remaining:
        problems.append(f'pairs {remaining} still descending')
    return _result("sum-'n+1' transform", not problems,
                   f"I'={list(trace.index_set)}, f increased by {trace.total_delta}",
                   '; '.join(problems))


def check_closed_form_structure(seq: Sequence) -> PropertyCheck:
    pair = construct_optimal(seq.provenance)
    problems = []
    for label, candidate in (('C*', pair.primary), ('C*d', pair.dual)):
        if not is_wedge_shaped(candidate):
            problems.append(f'{label} not wedge-shaped')
        if violated_necessary_conditions(candidate):
            problems.append(f'{label} violates a necessary condition')
    if seq.n >= 2 and not check_interleaving(pair.primary):
        problems.append('C* does not interleave')
    if dual(pair.primary).entries != pair.dual.entries or dual(pair.dual).entries != pair.primary.entries:
        problems.append('C* and C*d are not each other\'s dual')
    return _result('closed-form optimum structure', not problems,
                   'wedge-shaped, interleaved, self-dual pair', '; '.join(problems))


def check_witnesses(seq: Sequence) -> PropertyCheck:
    violations = violated_necessary_conditions(seq)
    unsound = [v.kind.value for v in violations
               if v.witness is not None and not delta_f(seq, *v.witness).favorable]
    kinds = ', '.join(v.kind.value for v in violations) or 'none'
    return _result('necessary-condition witnesses', not unsound,
                   f'violations: {kinds}', f'witness without gain for {unsound}')


def check_oracle_equivalence(seq: Sequence, oracle_limit: int, workers=None) -> PropertyCheck:
    name = 'exhaustive optimum matches closed form'
    try:
        result = brute_force(seq.provenance, Objective.MAX_VARIANCE, limit_n=oracle_limit, workers=workers)
    except InstanceTooLarge as e:
        return PropertyCheck(name, CheckStatus.SKIP, str(e))
    found = {s.entries for s in result.optima}
    built = {s.entries for s in optimal_sequences(seq.provenance)}
    if seq.provenance.distinct:
        return _result(name, found == built, f'{len(found)} optima, as constructed',
                       f'oracle found {sorted(found)}')
    return _result(name, built <= found, 'constructed optima are among the exhaustive optima',
                   'a constructed sequence is not optimal')


def check_search_monotone(seq: Sequence) -> PropertyCheck:
    report = local_search(seq, Strategy.BEST_IMPROVEMENT)
    steps = report.f_trajectory
    monotone = all(strictly_greater(b, a) for a, b in zip(steps, steps[1:]))
    return _result('local search monotone', monotone and report.converged,
                   f'{len(report.steps)} steps, converged',
                   'trajectory not strictly increasing or not converged')


def run_property_suite(seq: Sequence, oracle_limit: int, workers=None) -> list:
    """Run every property check on one sequence."""
    return [
        check_dual_invariance(seq),
        check_delta_consistency(seq),
        check_sum_n2(seq),
        check_sum_n1(seq),
        check_closed_form_structure(seq),
        check_witnesses(seq),
        check_oracle_equivalence(seq, oracle_limit, workers),
        check_search_monotone(seq),
    ]
