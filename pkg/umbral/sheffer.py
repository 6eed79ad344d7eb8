"""
Sheffer pairs and the polynomial sequences they determine.

For a pair (g, f) with g invertible and f delta, the Sheffer sequence S_n is
fixed by

    1 / g(fbar(t)) e^{x fbar(t)} = sum_n S_n(x) t^n / n!

Collecting powers of x, the coefficient of x^k in S_n is the exponential
coefficient n of G fbar^k / k! with G = 1 / g(fbar), so the whole table comes
out of one compositional inverse and a run of series products.
"""
import logging
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from math import comb, factorial

from coefficients.exceptions import NotDelta, NotInvertible, OrderUndefined, PrecisionError, SeriesDomainError
from coefficients.fields import lift
from polyop.operators import apply_series
from polyop.polynomial import Poly, poly_eval, poly_shift
from series.formal import Series, order, series_comp_inverse, series_compose, series_inverse, series_mul

from .pairing import pairing

logger = logging.getLogger(__name__)


def _order_or_none(s):
    try:
        return order(s)
    except OrderUndefined:
        return None


@dataclass(frozen=True)
class ShefferPair:
    """(g, f) with order(g) = 0 and order(f) = 1."""

    g: Series
    f: Series
    label: str = ''

    def __post_init__(self):
        g, f = lift(self.g, self.f)
        if _order_or_none(g) != 0:
            raise NotInvertible('not invertible')
        if _order_or_none(f) != 1:
            raise NotDelta('not a delta series')
        object.__setattr__(self, 'g', g)
        object.__setattr__(self, 'f', f)

    @classmethod
    def associated(cls, f, label=''):
        return cls(Series.one(f.field, f.precision), f, label)

    @property
    def field(self):
        return self.f.field

    @property
    def precision(self):
        return min(self.g.precision, self.f.precision)


@dataclass(frozen=True)
class PolySequence:
    polys: tuple
    pair: ShefferPair = dataclass_field(default=None, compare=False)

    def __getitem__(self, n):
        return self.polys[n]

    def __len__(self):
        return len(self.polys)

    @property
    def n_max(self):
        return len(self.polys) - 1


def exponential_family(prefactor, exponent, n_max, pair=None):
    """
    Polynomials S_n with prefactor(t) e^{x exponent(t)} = sum S_n(x) t^n / n!.

    Args:
        prefactor: Series, any order
        exponent: Series with zero constant term
        n_max: last degree wanted; both series need precision n_max + 1

    Returns:
        PolySequence
    """
    if n_max < 0:
        raise ValueError('n_max must be >= 0')
    prefactor, exponent = lift(prefactor, exponent)
    need = n_max + 1
    power = prefactor.truncate(need)
    exponent = exponent.truncate(need)
    field = power.field
    if not field.is_zero(exponent.coeffs[0]):
        raise SeriesDomainError('exponent series must have zero constant term')
    # coefficient of x^k in S_n is the exponential coefficient n of prefactor exponent^k / k!
    table = [[field.zero] * (n + 1) for n in range(need)]
    for k in range(need):
        if k:
            power = series_mul(power, exponent)
        scale = Fraction(1, factorial(k))
        for n in range(k, need):
            table[n][k] = field.scale(power.coeffs[n], scale)
    return PolySequence(tuple(Poly(field, row) for row in table), pair)


def sheffer_sequence(pair, n_max):
    """S_0 .. S_{n_max} of the pair; needs both series to precision n_max + 1."""
    if n_max < 0:
        raise ValueError('n_max must be >= 0')
    need = n_max + 1
    if pair.precision < need:
        raise PrecisionError(f"insufficient precision: need {need}, series has {pair.precision}")
    # the linear term of f must survive truncation, also for n_max = 0
    fbar = series_comp_inverse(pair.f.truncate(max(need, 2))).truncate(need)
    prefactor = series_inverse(series_compose(pair.g.truncate(need), fbar))
    seq = exponential_family(prefactor, fbar, n_max, pair)
    logger.debug(f"sheffer sequence {pair.label or '(unnamed)'} built to n = {n_max}")
    return seq


def associated_sequence(f, n_max):
    return sheffer_sequence(ShefferPair.associated(f), n_max)


def duality_failure(pair, seq):
    """First (n, k) where <g f^k | S_n> != n! delta_{n,k}, or None."""
    n_max = seq.n_max
    need = n_max + 1
    g = pair.g.truncate(need)
    f = pair.f.truncate(need)
    polys = [s.convert(pair.field) for s in seq.polys]
    functionals = [g]
    for _ in range(n_max):
        functionals.append(series_mul(functionals[-1], f))
    for n in range(need):
        for k in range(need):
            expected = factorial(n) if n == k else 0
            if pairing(functionals[k], polys[n]) != pair.field.coerce(expected):
                return n, k
    return None


def verify_duality(pair, seq):
    return duality_failure(pair, seq) is None


def binomial_convolution_sides(seq, g, n, y, swapped=False):
    """
    Both sides of the binomial identity at degree n, as (lhs, rhs) polynomials.

    S_n(x + y) = sum_k C(n, k) p_k(y) S_{n-k}(x), with p_k = g(t) S_k the
    associated sequence of f; swapped=True builds the mirrored form
    sum_k C(n, k) S_{n-k}(y) p_k(x) instead.
    """
    field = seq[n].field
    g = g.convert(field) if g.field is not field else g
    y = field.coerce(y)
    lhs = poly_shift(seq[n], y)
    rhs = Poly.zero(field)
    for k in range(n + 1):
        p_k = apply_series(g, seq[k])
        if swapped:
            term = p_k.scale(poly_eval(seq[n - k], y) * comb(n, k))
        else:
            term = seq[n - k].scale(poly_eval(p_k, y) * comb(n, k))
        rhs = rhs + term
    return lhs, rhs


def binomial_convolution_failure(pair, n, y, swapped=False):
    """First degree m <= n where the binomial identity fails, or None."""
    seq = sheffer_sequence(pair, n)
    g = pair.g.truncate(n + 1)
    for m in range(n + 1):
        lhs, rhs = binomial_convolution_sides(seq, g, m, y, swapped)
        if lhs != rhs:
            return m
    return None


def binomial_convolution_check(pair, n, y, swapped=False):
    return binomial_convolution_failure(pair, n, y, swapped) is None

