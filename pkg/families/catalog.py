"""
Named polynomial families.

Every family has a Sheffer pair (g, f); most also have a generating function
prefactor(t) e^{x L(t)} written directly in t. When both exist the sequence is
built both ways and the two must agree coefficient for coefficient.

Usage:
    from families.catalog import FamilyId, FamilyKind, family_sequence

    seq = family_sequence(FamilyId(FamilyKind.DAEHEE), 4)
    seq[1]    # 2*x + 2/(1-lambda)
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

from django.db import models

from coefficients.exceptions import FamilyParameterError, InternalConsistencyError, UnknownFamily
from coefficients.fields import LAMBDA, RATIONALS
from series.formal import Series, series_div, series_inverse, series_log, series_pow_int
from series.library import (
    assoc_s_delta,
    bernoulli_kernel,
    bernoulli_kernel_inverse,
    daehee_delta,
    exp_minus_one,
    frobenius_euler_kernel,
    frobenius_euler_kernel_inverse,
    log1p,
    log_ratio,
    mittag_leffler_lambda_delta,
    one_minus_lambda,
    t_series,
    tstar_delta,
    tstar_inverse,
    working_precision,
)
from umbral.sheffer import ShefferPair, exponential_family, sheffer_sequence

logger = logging.getLogger(__name__)


class FamilyKind(models.TextChoices):
    BERNOULLI = 'bernoulli', 'Bernoulli polynomials of order alpha'
    FROBENIUS_EULER = 'frobenius-euler', 'Frobenius-Euler polynomials of order alpha'
    DAEHEE = 'daehee', 'Daehee polynomials'
    CHANGHEE = 'changhee', 'Changhee polynomials of order a'
    MITTAG_LEFFLER = 'mittag-leffler', 'Mittag-Leffler sequence'
    MITTAG_LEFFLER_LAMBDA = 'mittag-leffler-lambda', 'lambda-analogue of the Mittag-Leffler sequence'
    DAEHEE2 = 'daehee2', 'Daehee polynomials of the second kind'
    ASSOC_S = 'assoc-s', 'associated sequence of (1-lambda)t/(e^t-lambda)'
    ASSOC_T = 'assoc-t', 'associated sequence of 2t/(1+t^2)'
    REMARK_S44 = 'remark-s44', 'Sheffer sequence for ((1-lambda)/(e^t-lambda), t(1-lambda)/(e^t-lambda))'


ORDERED_KINDS = {FamilyKind.BERNOULLI, FamilyKind.FROBENIUS_EULER, FamilyKind.CHANGHEE}

LAMBDA_KINDS = {
    FamilyKind.FROBENIUS_EULER,
    FamilyKind.DAEHEE,
    FamilyKind.CHANGHEE,
    FamilyKind.MITTAG_LEFFLER_LAMBDA,
    FamilyKind.DAEHEE2,
    FamilyKind.ASSOC_S,
    FamilyKind.REMARK_S44,
}


@dataclass(frozen=True)
class FamilyId:
    """A family and, for ordered families, its integer order (alpha or a)."""

    kind: FamilyKind
    order: int = None

    def __post_init__(self):
        try:
            kind = FamilyKind(self.kind)
        except ValueError:
            raise UnknownFamily(f"unknown family: {self.kind}")
        object.__setattr__(self, 'kind', kind)
        if kind in ORDERED_KINDS:
            order = 1 if self.order is None else self.order
            if isinstance(order, bool) or not isinstance(order, int):
                raise FamilyParameterError(f"order must be an integer, got {order!r}")
            if kind == FamilyKind.CHANGHEE and order == 0:
                raise FamilyParameterError('changhee order a must be nonzero')
            object.__setattr__(self, 'order', order)
        elif self.order is not None:
            raise FamilyParameterError(f"family {kind.value} takes no order")

    @property
    def field(self):
        return LAMBDA if self.kind in LAMBDA_KINDS else RATIONALS

    def __str__(self):
        if self.order is None:
            return self.kind.value
        return f"{self.kind.value}({self.order})"


def _lambda_log_ratio(precision):
    """log((1 - lambda t) / (1 - t)), the compositional inverse of (e^t - 1)/(e^t - lambda)."""
    lam = LAMBDA.generator()
    return (
        series_log(Series.from_ordinary(LAMBDA, [1, -lam], precision))
        - series_log(Series.from_ordinary(LAMBDA, [1, -1], precision))
    )


def family_pair(fid, precision):
    """The Sheffer pair (g, f) of a family, both series at the given precision."""
    kind = fid.kind
    one = Series.one(RATIONALS, precision)
    if kind == FamilyKind.BERNOULLI:
        g, f = series_pow_int(bernoulli_kernel_inverse(RATIONALS, precision), fid.order), t_series(RATIONALS, precision)
    elif kind == FamilyKind.FROBENIUS_EULER:
        g, f = series_pow_int(frobenius_euler_kernel_inverse(precision), fid.order), t_series(RATIONALS, precision)
    elif kind == FamilyKind.DAEHEE:
        g, f = frobenius_euler_kernel(precision), daehee_delta(RATIONALS, precision)
    elif kind == FamilyKind.CHANGHEE:
        g, f = series_pow_int(frobenius_euler_kernel(precision), fid.order), exp_minus_one(RATIONALS, precision)
    elif kind == FamilyKind.MITTAG_LEFFLER:
        g, f = one, daehee_delta(RATIONALS, precision)
    elif kind == FamilyKind.MITTAG_LEFFLER_LAMBDA:
        g, f = one, mittag_leffler_lambda_delta(precision)
    elif kind == FamilyKind.DAEHEE2:
        g, f = frobenius_euler_kernel(precision), mittag_leffler_lambda_delta(precision)
    elif kind == FamilyKind.ASSOC_S:
        g, f = one, assoc_s_delta(precision)
    elif kind == FamilyKind.ASSOC_T:
        g, f = one, tstar_delta(RATIONALS, precision)
    else:
        g, f = frobenius_euler_kernel(precision), assoc_s_delta(precision)
    return ShefferPair(g, f, str(fid))


def generating_function(fid, precision):
    """
    (prefactor, exponent) with prefactor(t) e^{x exponent(t)} generating the family.

    Returns None for families defined only through their Sheffer pair.
    """
    kind = fid.kind
    one = Series.one(RATIONALS, precision)
    if kind == FamilyKind.BERNOULLI:
        return series_pow_int(bernoulli_kernel(RATIONALS, precision), fid.order), t_series(RATIONALS, precision)
    if kind == FamilyKind.FROBENIUS_EULER:
        return series_pow_int(frobenius_euler_kernel(precision), fid.order), t_series(RATIONALS, precision)
    if kind == FamilyKind.DAEHEE:
        lam = LAMBDA.generator()
        c = one_minus_lambda()
        prefactor = series_div(
            Series.from_ordinary(LAMBDA, [c, 1 + lam], precision),
            Series.from_ordinary(LAMBDA, [c, -c], precision),
        )
        return prefactor, log_ratio(RATIONALS, precision)
    if kind == FamilyKind.CHANGHEE:
        base = Series.from_ordinary(LAMBDA, [1, one_minus_lambda().inverse()], precision)
        return series_pow_int(base, fid.order), log1p(RATIONALS, precision)
    if kind == FamilyKind.MITTAG_LEFFLER:
        return one, log_ratio(RATIONALS, precision)
    if kind == FamilyKind.MITTAG_LEFFLER_LAMBDA:
        return one, _lambda_log_ratio(precision)
    if kind == FamilyKind.DAEHEE2:
        return series_inverse(Series.from_ordinary(LAMBDA, [1, -1], precision)), _lambda_log_ratio(precision)
    if kind == FamilyKind.ASSOC_T:
        return one, tstar_inverse(RATIONALS, precision)
    return None


@lru_cache(maxsize=256)
def _cached_sequence(fid, n_max, precision):
    pair = family_pair(fid, precision)
    seq = sheffer_sequence(pair, n_max)
    gf = generating_function(fid, precision)
    if gf is not None:
        direct = exponential_family(gf[0], gf[1], n_max, pair)
        for n, (a, b) in enumerate(zip(seq.polys, direct.polys)):
            if a != b:
                logger.error(f"family {fid}: generating function and Sheffer pair disagree at n = {n}")
                raise InternalConsistencyError(
                    f"family {fid}: generating function and Sheffer pair disagree at n = {n}"
                )
    logger.debug(f"family {fid} built to n = {n_max} at precision {precision}")
    return seq


def family_sequence(fid, n_max):
    """
    Polynomials 0..n_max of a family.

    Args:
        fid: FamilyId
        n_max: last degree, >= 0

    Returns:
        PolySequence whose pair is the family's Sheffer pair
    """
    if n_max < 0:
        raise FamilyParameterError('n must be >= 0')
    return _cached_sequence(fid, n_max, working_precision(n_max))


def family_polynomial(fid, n):
    return family_sequence(fid, n)[n]


def family_numbers(fid, n_max):
    """Values at x = 0: Bernoulli numbers, Frobenius-Euler numbers, Changhee numbers, ..."""
    return [p.coeff(0) for p in family_sequence(fid, n_max).polys]


def bernoulli(order, n):
    """B_n^{(order)}(x)."""
    return family_polynomial(FamilyId(FamilyKind.BERNOULLI, order), n)


def frobenius_euler(order, n):
    """H_n^{(order)}(x | lambda)."""
    return family_polynomial(FamilyId(FamilyKind.FROBENIUS_EULER, order), n)
