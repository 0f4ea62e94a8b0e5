"""
Utility functions for VarSeq
"""

import math
import sys
from fractions import Fraction
from numbers import Rational

from .constants import REL_TOL, RESET


def is_exact(value):
    """True for ints and Fractions (bool excluded)."""
    return isinstance(value, Rational) and not isinstance(value, bool)


def divide(numerator, denominator, exact):
    """Divide on the exact path with Fraction, else as floats."""
    if exact:
        return Fraction(numerator) / denominator
    return numerator / denominator


def same_value(a, b, scale=0):
    """Equality that is exact for rationals and relative-tolerance for floats.

    `scale` is the magnitude the values were computed from; the absolute
    floor is REL_TOL * |scale|, zero by default.
    """
    if is_exact(a) and is_exact(b):
        return a == b
    return math.isclose(a, b, rel_tol=REL_TOL, abs_tol=REL_TOL * abs(scale))


def strictly_greater(a, b, scale=0):
    """a > b, where float values within tolerance of each other count as equal."""
    if is_exact(a) and is_exact(b):
        return a > b
    return a > b and not same_value(a, b, scale)


def pair_bounds(n):
    """Return (u, u') = (ceil(n/2), floor(n/2))."""
    return (n + 1) // 2, n // 2


def paint(text, color, enabled=True):
    """Wrap text in an ANSI color when colors are enabled."""
    if not enabled:
        return text
    return f"{color}{text}{RESET}"


def resolve_color(setting, stream=None):
    """Resolve the `color` config value (auto/true/false) for a stream."""
    value = str(setting).lower()
    if value == 'auto':
        stream = stream or sys.stdout
        return hasattr(stream, 'isatty') and stream.isatty()
    return value == 'true'


def debug_print(message, config):
    """Print debug messages only if debug mode is enabled"""
    if str(config.get('debug', False)).lower() == 'true':
        print(message, file=sys.stderr)
