"""
Command-line front end for VarSeq

Every subcommand reads one instance file, builds a report and prints it
either as colored text or (with --json) as a single JSON document. Library
errors are turned into exit codes here and nowhere else.
"""

import argparse
import json
import sys

from .config_loader import load_config
from .constants import (
    RED, ORANGE, VERSION,
    EXIT_OK, EXIT_INPUT_ERROR, EXIT_TOO_LARGE,
)
from .construct import construct_optimal
from .core import partial_sums
from .ctv import ctv_screen
from .errors import InstanceTooLarge, UsageError, VarSeqError
from .formatters import (
    check_lines, checks_to_dict,
    optimal_lines, optimal_to_dict,
    oracle_lines, oracle_to_dict,
    screen_lines, screen_to_dict,
    search_lines, search_to_dict,
    stats_lines, stats_to_dict,
    trace_lines, trace_to_dict,
)
from .instances import load_candidates, load_instance, parse_order_spec
from .oracle import Objective, brute_force
from .search import Strategy, local_search, random_start
from .transforms import dual_transform, sum_n1_transform, sum_n2_transform
from .utils import debug_print, paint, resolve_color
from .verify import run_property_suite

TRANSFORMS = {
    'dual': dual_transform,
    'sum-n2': sum_n2_transform,
    'sum-n1': sum_n1_transform,
}


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; that code belongs to InstanceTooLarge."""

    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = _ArgumentParser(
        prog='VarSeq.py',
        description='Sequence positive numbers to maximize the variance of their partial sums.',
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {VERSION}')
    parser.add_argument('--json', action='store_true', help='emit one JSON document instead of text')
    parser.add_argument('--config', metavar='PATH', help='configuration file (default: config/config.yml)')
    parser.add_argument('--no-color', action='store_true', help='disable ANSI colors')

    sub = parser.add_subparsers(dest='command', metavar='COMMAND', parser_class=_ArgumentParser)
    sub.required = True

    p = sub.add_parser('evaluate', help='partial sums, mean and f of the instance sequence')
    p.add_argument('file')

    p = sub.add_parser('optimal', help='the closed-form optimal pair')
    p.add_argument('file')

    p = sub.add_parser('transform', help='apply one transform and trace it')
    p.add_argument('file')
    p.add_argument('--kind', choices=sorted(TRANSFORMS), required=True)
    p.add_argument('--seq', metavar='ORDER', help='order-spec overriding the file sequence, e.g. 1,6,2,3')

    p = sub.add_parser('search', help='favorable-interchange local search')
    p.add_argument('file')
    p.add_argument('--strategy', choices=[s.value for s in Strategy], default=Strategy.BEST_IMPROVEMENT.value)
    p.add_argument('--seed', type=int, help='start from a random permutation drawn with this seed')

    p = sub.add_parser('oracle', help='exhaustive search over all permutations')
    p.add_argument('file')
    p.add_argument('--objective', choices=[o.value for o in Objective], default=Objective.MAX_VARIANCE.value)
    p.add_argument('--pin-first', action='store_true', help='fix c_1 to the smallest value (max only)')
    p.add_argument('--limit', type=int, help='largest n to enumerate (capped at the hard limit)')

    p = sub.add_parser('ctv-screen', help='drop candidates dominated by the sum-n2 transform')
    p.add_argument('file')
    p.add_argument('--candidates', required=True, metavar='FILE')
    p.add_argument('--with-sum-n1', action='store_true', help='also accept sum-n1 images as dominance links')

    p = sub.add_parser('verify', help='run the property suite on the instance')
    p.add_argument('file')
    return parser


def _cmd_evaluate(args, config, color):
    instance = load_instance(args.file, config['exact_decimals'])
    stats = partial_sums(instance.sequence)
    return stats_to_dict(instance.sequence, stats), stats_lines(instance.sequence, stats, color)


def _cmd_optimal(args, config, color):
    instance = load_instance(args.file, config['exact_decimals'])
    pair = construct_optimal(instance.number_set)
    distinct = instance.number_set.distinct
    return optimal_to_dict(pair, distinct), optimal_lines(pair, distinct, color)


def _cmd_transform(args, config, color):
    instance = load_instance(args.file, config['exact_decimals'])
    start = instance.sequence
    if args.seq:
        start = parse_order_spec(args.seq, instance.number_set)
    result, trace = TRANSFORMS[args.kind](start)
    debug_print(f"{args.kind}: status {trace.status.value}, applied {trace.applied}", config)
    return trace_to_dict(trace, result), trace_lines(trace, start, result, color)


def _cmd_search(args, config, color):
    instance = load_instance(args.file, config['exact_decimals'])
    start = instance.sequence
    if args.seed is not None:
        start = random_start(instance.number_set, args.seed)
    report = local_search(start, Strategy(args.strategy))
    debug_print(f"search finished after {len(report.steps)} steps", config)
    return search_to_dict(report), search_lines(report, color)


def _cmd_oracle(args, config, color):
    instance = load_instance(args.file, config['exact_decimals'])
    limit = config['oracle_limit'] if args.limit is None else args.limit
    result = brute_force(
        instance.number_set,
        Objective(args.objective),
        limit_n=limit,
        pin_first=args.pin_first,
        workers=config['threads'],
    )
    return oracle_to_dict(result), oracle_lines(result, color)


def _cmd_ctv_screen(args, config, color):
    instance = load_instance(args.file, config['exact_decimals'])
    candidates = load_candidates(args.candidates, instance.number_set, config['exact_decimals'])
    survivors = ctv_screen(candidates, with_sum_n1=args.with_sum_n1)
    debug_print(f"ctv-screen kept {len(survivors)} of {len(candidates)}", config)
    return screen_to_dict(candidates, survivors), screen_lines(candidates, survivors, color)


def _cmd_verify(args, config, color):
    instance = load_instance(args.file, config['exact_decimals'])
    checks = run_property_suite(instance.sequence, config['oracle_limit'], workers=config['threads'])
    return checks_to_dict(checks), check_lines(checks, color)


COMMANDS = {
    'evaluate': _cmd_evaluate,
    'optimal': _cmd_optimal,
    'transform': _cmd_transform,
    'search': _cmd_search,
    'oracle': _cmd_oracle,
    'ctv-screen': _cmd_ctv_screen,
    'verify': _cmd_verify,
}


def _fail(message, color):
    print(paint(f"Error: {message}", RED, color), file=sys.stderr)


def run(argv=None):
    """Parse argv, run one subcommand and return the process exit code."""
    err_color = resolve_color('auto', sys.stderr)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        _fail(e, err_color)
        return EXIT_INPUT_ERROR

    config = load_config(args.config)
    color = False if args.no_color or args.json else resolve_color(config['color'])
    err_color = False if args.no_color else resolve_color(config['color'], sys.stderr)
    debug_print(f"config: {config}", config)

    try:
        data, lines = COMMANDS[args.command](args, config, color)
    except InstanceTooLarge as e:
        _fail(e, err_color)
        print(paint("Raise --limit (up to the hard limit) or use `optimal`", ORANGE, err_color),
              file=sys.stderr)
        return EXIT_TOO_LARGE
    except (VarSeqError, ValueError) as e:
        _fail(e, err_color)
        return EXIT_INPUT_ERROR

    if args.json:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print('\n'.join(lines))
    return EXIT_OK
