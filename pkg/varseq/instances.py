"""
Input file reading for VarSeq

Instance files hold one number per line, optionally an `order:` line of
1-based ranks selecting an arrangement, and `#` comments:

    # worked example
    1
    2
    ...
    order: 1,6,2,3,4,8,7,5
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .core import NumberSet, Sequence
from .errors import InputParseError, VarSeqError

_INT_RE = re.compile(r'^[+]?\d+$')
_FRACTION_RE = re.compile(r'^[+]?\d+\s*/\s*\d+$')
_SEPARATOR_RE = re.compile(r'[,\s]+')


@dataclass(frozen=True)
class Instance:
    """A parsed instance file."""

    path: str
    number_set: NumberSet
    sequence: Sequence
    order_given: bool


def parse_number(token, exact_decimals=False):
    """Parse an int, a p/q rational or a decimal literal."""
    token = token.strip()
    if _INT_RE.match(token):
        return int(token)
    if _FRACTION_RE.match(token):
        try:
            value = Fraction(token.replace(' ', ''))
        except ZeroDivisionError:
            raise ValueError(f"'{token}' divides by zero") from None
        return value.numerator if value.denominator == 1 else value
    try:
        value = float(token)
    except ValueError:
        raise ValueError(f"'{token}' is not a number") from None
    if not math.isfinite(value):
        raise ValueError(f"'{token}' is not finite")
    if exact_decimals:
        value = Fraction(token)
        return value.numerator if value.denominator == 1 else value
    return value


def parse_ranks(text):
    """Split an order-spec body like '1,6,2' into ints."""
    tokens = [t for t in _SEPARATOR_RE.split(text.strip()) if t]
    if not tokens:
        raise ValueError("empty order-spec")
    ranks = []
    for token in tokens:
        if not _INT_RE.match(token):
            raise ValueError(f"rank '{token}' is not a positive integer")
        ranks.append(int(token))
    return ranks


def _strip_order_prefix(text):
    text = text.strip()
    if text.lower().startswith('order:'):
        return text[len('order:'):]
    return text


def parse_order_spec(text, number_set: NumberSet) -> Sequence:
    """Turn 'order: 1,3,2' (prefix optional) into a Sequence of number_set."""
    return number_set.sequence_from_ranks(parse_ranks(_strip_order_prefix(text)))


def _content_lines(path):
    try:
        with open(path, 'rb') as handle:
            raw = handle.read().splitlines()
    except OSError as e:
        raise InputParseError(path, 0, f"cannot read file ({e.strerror or e})") from None
    for line_number, data in enumerate(raw, start=1):
        try:
            line = data.decode('utf-8-sig' if line_number == 1 else 'utf-8')
        except UnicodeDecodeError:
            raise InputParseError(path, line_number, "not valid UTF-8") from None
        content = line.split('#', 1)[0].strip()
        if content:
            yield line_number, content


def load_instance(path, exact_decimals=False) -> Instance:
    """Read an instance file; without an order line the file order is the sequence."""
    path = str(Path(path))
    values = []
    order = None
    for line_number, content in _content_lines(path):
        if content.lower().startswith('order:'):
            if order is not None:
                raise InputParseError(path, line_number, "more than one order line")
            try:
                order = (line_number, parse_ranks(content[len('order:'):]))
            except ValueError as e:
                raise InputParseError(path, line_number, str(e)) from None
            continue
        try:
            value = parse_number(content, exact_decimals)
        except ValueError as e:
            raise InputParseError(path, line_number, str(e)) from None
        if value <= 0:
            raise InputParseError(path, line_number, f"value {content} is not positive")
        values.append(value)

    if not values:
        raise InputParseError(path, 0, "no numbers found")
    try:
        number_set = NumberSet(tuple(values))
    except VarSeqError as e:
        raise InputParseError(path, 0, str(e)) from None

    if order is None:
        return Instance(path, number_set, number_set.sequence(values), order_given=False)
    line_number, ranks = order
    try:
        sequence = number_set.sequence_from_ranks(ranks)
    except VarSeqError as e:
        raise InputParseError(path, line_number, str(e)) from None
    return Instance(path, number_set, sequence, order_given=True)


def load_candidates(path, number_set: NumberSet, exact_decimals=False) -> list:
    """One candidate per line: comma/space separated values, or an order: rank line."""
    path = str(Path(path))
    candidates = []
    for line_number, content in _content_lines(path):
        try:
            if content.lower().startswith('order:'):
                candidates.append(parse_order_spec(content, number_set))
                continue
            tokens = [t for t in _SEPARATOR_RE.split(content) if t]
            entries = tuple(parse_number(t, exact_decimals) for t in tokens)
            candidates.append(number_set.sequence(entries))
        except (ValueError, VarSeqError) as e:
            raise InputParseError(path, line_number, str(e)) from None
    if not candidates:
        raise InputParseError(path, 0, "no candidates found")
    return candidates
