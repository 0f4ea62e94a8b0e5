"""
Number and report formatting for VarSeq

Every report has two renderings: human-readable lines (optionally colored)
and a plain dict for the JSON document. Exact rationals serialize as "p/q"
strings so nothing is lost; positions are always 1-based.
"""

from fractions import Fraction

from .constants import BLUE, GREEN, ORANGE, RED
from .core import partial_sums
from .utils import paint


def _terminating_digits(value: Fraction):
    """Decimal places needed to write value exactly, or None if it repeats."""
    den = value.denominator
    places = 0
    while den % 10 == 0:
        den //= 10
        places += 1
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return None
    return places + max(twos, fives)


def format_number(value):
    """Render a number for humans: exact decimals when they terminate, p/q otherwise."""
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        places = _terminating_digits(value)
        if places is None:
            return f"{value.numerator}/{value.denominator}"
        scaled = abs(value.numerator) * 10 ** places // value.denominator
        sign = '-' if value < 0 else ''
        whole, frac = divmod(scaled, 10 ** places)
        return f"{sign}{whole}.{frac:0{places}d}"
    return format(value, '.12g')


def number_to_json(value):
    """JSON form of a number: ints stay ints, rationals become 'p/q', floats stay floats."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return f"{value.numerator}/{value.denominator}"
    return value


def format_entries(entries):
    return '[' + ', '.join(format_number(v) for v in entries) + ']'


def format_pairs(pairs):
    return ', '.join(f"({i},{j})" for i, j in pairs) or '(none)'


def sequence_to_dict(seq):
    return {
        'entries': [number_to_json(v) for v in seq.entries],
        'order': seq.order_spec(),
    }


# ---- evaluate -----------------------------------------------------------------

def stats_to_dict(seq, stats=None):
    stats = stats or partial_sums(seq)
    data = {
        'sequence': sequence_to_dict(seq),
        'n': seq.n,
        'partial_sums': [number_to_json(s) for s in stats.sums],
        'mean': number_to_json(stats.mean),
        'variance': number_to_json(stats.variance),
        'exact': stats.exact,
        'integral': seq.provenance.integral,
    }
    if stats.exact:
        data['exact_numerator'] = number_to_json(stats.exact_numerator)
        data['denominator'] = seq.n * seq.n
    return data


def stats_lines(seq, stats=None, color=False):
    stats = stats or partial_sums(seq)
    lines = [
        paint("Partial-sum statistics", BLUE, color),
        f"Sequence: {format_entries(seq.entries)}",
        f"Order: {seq.order_spec()}",
        f"Partial sums: {format_entries(stats.sums)}",
        f"Mean = {format_number(stats.mean)}",
        f"f = {format_number(stats.variance)}",
    ]
    if stats.exact:
        lines.append(f"Exact n^2 f = {format_number(stats.exact_numerator)} / {seq.n * seq.n}")
    return lines


# ---- optimal ------------------------------------------------------------------

def optimal_to_dict(pair, distinct):
    stats = partial_sums(pair.primary)
    return {
        'primary': sequence_to_dict(pair.primary),
        'dual': sequence_to_dict(pair.dual),
        'variance': number_to_json(stats.variance),
        'exact_numerator': number_to_json(stats.exact_numerator) if stats.exact else None,
        'unique': distinct,
    }


def optimal_lines(pair, distinct, color=False):
    stats = partial_sums(pair.primary)
    lines = [
        paint("Closed-form optima", BLUE, color),
        f"C*   = {format_entries(pair.primary.entries)}  (order: {pair.primary.order_spec()})",
        f"C*d  = {format_entries(pair.dual.entries)}  (order: {pair.dual.order_spec()})",
        f"f = {format_number(stats.variance)}",
    ]
    if not distinct:
        lines.append(paint("Values contain ties: further optima may exist", ORANGE, color))
    return lines


# ---- transform ----------------------------------------------------------------

def trace_to_dict(trace, result):
    return {
        'kind': trace.kind.value,
        'status': trace.status.value,
        'index_set': list(trace.index_set),
        'applied': [list(pair) for pair in trace.applied],
        'per_step': [number_to_json(v) for v in trace.per_step],
        'f_before': number_to_json(trace.f_before),
        'f_after': number_to_json(trace.f_after),
        'delta_f': number_to_json(trace.total_delta),
        'result': sequence_to_dict(result),
    }


def trace_lines(trace, start, result, color=False):
    status_color = GREEN if trace.transformed else ORANGE
    lines = [
        paint(f"Transform {trace.kind.value}", BLUE, color),
        f"Status: {paint(trace.status.value, status_color, color)}",
        f"Start:  {format_entries(start.entries)}",
        f"Result: {format_entries(result.entries)}",
        f"Interchanges: {format_pairs(trace.applied)}",
    ]
    if trace.per_step:
        lines.append("Per-step Δf: " + ', '.join(format_number(v) for v in trace.per_step))
    lines.extend([
        f"f before = {format_number(trace.f_before)}",
        f"f after = {format_number(trace.f_after)}",
        f"Δf = {format_number(trace.total_delta)}",
    ])
    return lines


# ---- search -------------------------------------------------------------------

def search_to_dict(report):
    return {
        'strategy': report.strategy.value,
        'start': sequence_to_dict(report.start),
        'end': sequence_to_dict(report.end),
        'steps': [
            {
                'kind': step.kind.value,
                'applied': [list(pair) for pair in step.applied],
                'delta_f': number_to_json(step.total_delta),
            }
            for step in report.steps
        ],
        'f_trajectory': [number_to_json(v) for v in report.f_trajectory],
        'converged': report.converged,
        'reached_closed_form': report.reached_closed_form,
    }


def search_lines(report, color=False):
    lines = [
        paint(f"Local search ({report.strategy.value})", BLUE, color),
        f"Start: {format_entries(report.start.entries)}  f = {format_number(report.f_trajectory[0])}",
    ]
    for number, step in enumerate(report.steps, start=1):
        lines.append(f"  step {number}: {step.kind.value} {format_pairs(step.applied)}"
                     f"  Δf = {format_number(step.total_delta)}  f = {format_number(step.f_after)}")
    lines.append(f"End: {format_entries(report.end.entries)}  f = {format_number(report.f_trajectory[-1])}")
    if report.converged:
        lines.append(paint("No favorable interchange remains", GREEN, color))
    else:
        lines.append(paint("Stopped before convergence", ORANGE, color))
    lines.append(f"Reached closed-form optimum: {'yes' if report.reached_closed_form else 'no'}")
    return lines


# ---- oracle -------------------------------------------------------------------

def oracle_to_dict(result):
    return {
        'objective': result.objective.value,
        'optima': [sequence_to_dict(seq) for seq in result.optima],
        'best_value': number_to_json(result.best_value),
        'best_variance': number_to_json(result.best_variance),
        'explored': result.explored,
        'pinned_first': result.pinned_first,
    }


def oracle_lines(result, color=False):
    label = 'maximum' if result.objective.value == 'max' else 'minimum'
    lines = [
        paint(f"Exhaustive {label} of f", BLUE, color),
        f"Permutations explored: {result.explored}" + (" (c_1 pinned)" if result.pinned_first else ''),
        f"Best f = {format_number(result.best_variance)}",
        f"Optima ({len(result.optima)}):",
    ]
    lines.extend(f"  {format_entries(seq.entries)}  (order: {seq.order_spec()})" for seq in result.optima)
    return lines


# ---- ctv ----------------------------------------------------------------------

def screen_to_dict(candidates, survivors):
    return {
        'candidates': [
            dict(sequence_to_dict(seq), variance=number_to_json(partial_sums(seq).variance))
            for seq in candidates
        ],
        'survivors': [sequence_to_dict(seq) for seq in survivors],
    }


def screen_lines(candidates, survivors, color=False):
    kept = {seq.entries for seq in survivors}
    lines = [paint("CTV screening (sum-'n+2' dominance)", BLUE, color)]
    for seq in candidates:
        mark = paint('keep', GREEN, color) if seq.entries in kept else paint('drop', RED, color)
        lines.append(f"  {mark}  {format_entries(seq.entries)}  f = {format_number(partial_sums(seq).variance)}")
    lines.append(f"Surviving candidates: {len(survivors)} of {len(candidates)}")
    return lines


# ---- verify -------------------------------------------------------------------

def checks_to_dict(checks):
    return {
        'checks': [
            {'name': check.name, 'status': check.status.value, 'detail': check.detail}
            for check in checks
        ],
        'passed': all(check.status.value != 'fail' for check in checks),
    }


def check_lines(checks, color=False):
    colors = {'pass': GREEN, 'fail': RED, 'skip': ORANGE}
    lines = [paint("Property suite", BLUE, color)]
    for check in checks:
        status = paint(check.status.value.upper(), colors[check.status.value], color)
        lines.append(f"  {status:<6} {check.name}: {check.detail}")
    failed = sum(1 for check in checks if check.status.value == 'fail')
    lines.append(f"{len(checks) - failed} of {len(checks)} checks without failure")
    return lines
