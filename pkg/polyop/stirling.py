"""
Falling factorials and Stirling numbers.

stirling1(n, l) is the signed coefficient of x^l in (x)_n; stirling2(l, n) is
read off the series (e^t - 1)^n / n!, whose exponential coefficient l is the
number of partitions of an l-set into n blocks.
"""
from functools import lru_cache
from math import factorial

from coefficients.fields import RATIONALS
from series.formal import series_pow_int
from series.library import exp_minus_one

from .polynomial import Poly


@lru_cache(maxsize=None)
def falling_factorial(n, field=RATIONALS):
    """(x)_n = x (x - 1) ... (x - n + 1); (x)_0 = 1."""
    result = Poly.constant(field, 1)
    for i in range(n):
        result = result * Poly(field, [-i, 1])
    return result


def stirling1(n, l):
    if n < 0 or l < 0:
        raise ValueError('Stirling indices must be >= 0')
    return falling_factorial(n).coeff(l)


@lru_cache(maxsize=None)
def _stirling2_column(n, precision):
    power = series_pow_int(exp_minus_one(RATIONALS, precision), n)
    return tuple(c / factorial(n) for c in power.coeffs)


def stirling2(l, n):
    if n < 0 or l < 0:
        raise ValueError('Stirling indices must be >= 0')
    if l < n:
        return RATIONALS.zero
    return _stirling2_column(n, l + 1)[l]


def count_set_partitions(l, n):
    """Number of partitions of {0, ..., l-1} into n nonempty blocks, by enumeration."""

    def blocks(i, used):
        # restricted growth strings: element i joins an existing block or opens the next one
        if i == l:
            return 1 if used == n else 0
        total = 0
        for b in range(min(used + 1, n)):
            total += blocks(i + 1, max(used, b + 1))
        return total

    return blocks(0, 0)
