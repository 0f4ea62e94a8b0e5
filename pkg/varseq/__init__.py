"""
VarSeq - sequencing positive numbers to maximize the variance of partial sums
"""

from .constants import VERSION
from .core import NumberSet, Sequence, partial_sums, variance
from .construct import construct_optimal
from .transforms import delta_f, dual, interchange, sum_n1_transform, sum_n2_transform

__version__ = VERSION
__all__ = [
    'VERSION',
    'NumberSet',
    'Sequence',
    'partial_sums',
    'variance',
    'construct_optimal',
    'delta_f',
    'dual',
    'interchange',
    'sum_n1_transform',
    'sum_n2_transform',
]
