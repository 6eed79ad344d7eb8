"""
The linear functional <f(t) | p(x)> and the expansions built on it.

With f = sum a_k t^k / k!, <f(t) | x^n> = a_n, extended linearly in p.
"""
import logging
from fractions import Fraction
from itertools import product
from math import factorial

from coefficients.exceptions import InternalConsistencyError, PrecisionError
from coefficients.fields import common_field, lift
from polyop.polynomial import Poly
from series.formal import Series, series_mul

logger = logging.getLogger(__name__)


def pairing(f, p):
    """<f(t) | p(x)>, exact."""
    field = common_field(f.field, p.field)
    if f.precision <= p.degree:
        raise PrecisionError(
            f"insufficient precision: need {p.degree + 1}, series has {f.precision}"
        )
    return field.sum_products((1, f.coeffs[k], c) for k, c in enumerate(p.coeffs))


def expand_by_functionals(p):
    """Rebuild p as sum_k <t^k | p> / k! x^k."""
    field = p.field
    n = p.degree + 1
    coeffs = []
    for k in range(n):
        value = pairing(Series.monomial(field, k, max(n, 1)), p)
        coeffs.append(field.scale(value, Fraction(1, factorial(k))))
    return Poly(field, coeffs)


def _compositions(n, m):
    """All (i_1, ..., i_m) with i_j >= 0 summing to n."""
    for head in product(range(n + 1), repeat=m - 1):
        rest = n - sum(head)
        if rest >= 0:
            yield head + (rest,)


def multinomial_sides(fs, n):
    """
    <f_1(t) ... f_m(t) | x^n> by two routes, returned as (product, expansion).

    Route one multiplies the series and reads coefficient n; route two sums
    the multinomial expansion over exponent compositions.
    """
    if not fs:
        raise ValueError('need at least one series')
    fs = lift(*fs)
    field = fs[0].field
    for f in fs:
        if f.precision <= n:
            raise PrecisionError(f"insufficient precision: need {n + 1}, series has {f.precision}")
    prod = fs[0]
    for f in fs[1:]:
        prod = series_mul(prod, f)
    direct = prod.coeffs[n]

    total = field.zero
    for idx in _compositions(n, len(fs)):
        coefficient = factorial(n)
        term = field.one
        for f, i in zip(fs, idx):
            coefficient //= factorial(i)
            term = term * f.coeffs[i]
        total = total + term * coefficient
    return direct, total


def multinomial_pairing(fs, n):
    """The common value of both routes; a disagreement is an engine bug."""
    direct, expanded = multinomial_sides(fs, n)
    if direct != expanded:
        logger.error(f"multinomial pairing mismatch at n = {n}")
        raise InternalConsistencyError(f"multinomial expansion disagrees with product at n = {n}")
    return direct
