"""
Registry of checkable identities.

Each identity computes, per degree n, a list of steps (name, lhs, rhs) and
compares both sides exactly in Q(lambda)[x]. Identities whose printed form is
suspect register several variants; every variant is evaluated and the report
records which one, if any, holds at every tested degree. Steps shared by all
variants are checked first and count against every variant.

Usage:
    from identities.registry import IdentityId, verify, verify_all

    report = verify(IdentityId.THM1, 8)
    report.passed
    [r.id for r in verify_all(4)]
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from django.conf import settings
from django.db import models

from coefficients.exceptions import IdentityParameterError, PoleError, UnknownIdentity
from coefficients.fields import LAMBDA, RATIONALS, field_of, lift
from families.catalog import FamilyId, FamilyKind, family_sequence
from families.closed_forms import (
    assoc_s_closed,
    changhee_closed,
    daehee2_closed,
    daehee2_printed,
    daehee_closed,
    falling,
    mittag_leffler_closed,
    mittag_leffler_lambda_closed,
    remark_s44_form,
    shifted_power,
    tstar_closed,
)
from polyop.operators import apply_series
from polyop.polynomial import Poly, mul_by_x, poly_derivative, poly_shift
from polyop.stirling import falling_factorial, stirling2
from series.formal import Series, series_div, series_mul, series_pow_int
from series.library import (
    assoc_s_delta,
    bernoulli_kernel,
    bernoulli_kernel_inverse,
    daehee_delta,
    exp_minus_one,
    exp_series,
    frobenius_euler_kernel,
    frobenius_euler_kernel_inverse,
    log1p,
    one_minus_lambda,
    t_series,
    tstar_inverse,
)
from umbral.pairing import multinomial_sides
from umbral.sheffer import associated_sequence, binomial_convolution_sides, exponential_family
from umbral.transfer import transfer, transfer_operator

from .report import DegreeVerdict, IdentityReport, SpotCheck, VariantResult, compare_polys

logger = logging.getLogger(__name__)


class IdentityId(models.TextChoices):
    THM1 = 'THM1', 'Theorem 1: associated sequence of (1-lambda)t/(e^t-lambda)'
    EQ18 = 'EQ18', 'Mittag-Leffler sequence from Daehee polynomials'
    EQ20 = 'EQ20', 'Transfer chain for the Theorem 1 sequence'
    EQ21_24_CHAIN = 'EQ21_24_CHAIN', 'Mittag-Leffler sequence through Bernoulli and Frobenius-Euler polynomials'
    THM2_EQ26 = 'THM2_EQ26', 'Theorem 2: Daehee polynomials by the Pincherle derivative'
    EQ28 = 'EQ28', 'Associated sequence of t/(e^t+1)'
    EQ29 = 'EQ29', 'Mittag-Leffler sequence as a sum of shifted Bernoulli polynomials'
    EQ30 = 'EQ30', 'Daehee polynomials as a sum of shifted Bernoulli polynomials'
    EQ31 = 'EQ31', 'Daehee polynomials in the falling factorial basis'
    THM3_EQ36 = 'THM3_EQ36', 'Theorem 3: Changhee polynomials of order a'
    THM4_EQ38 = 'THM4_EQ38', 'Theorem 4: x H_{n-1}^{(an)}(x|lambda) as an associated sequence'
    EQ39 = 'EQ39', 'x B_{n-1}^{(bn)}(x) as an associated sequence'
    EQ40_41 = 'EQ40_41', 'Frobenius-Euler polynomials from Bernoulli polynomials by transfer'
    THM5 = 'THM5', 'Theorem 5: shifted Frobenius-Euler sum against a Stirling sum'
    REMARK45 = 'REMARK45', 'Sheffer sequence for ((1-lambda)/(e^t-lambda), t(1-lambda)/(e^t-lambda))'
    THM6_EQ49 = 'THM6_EQ49', 'Theorem 6: lambda-analogue of the Mittag-Leffler sequence'
    EQ50 = 'EQ50', 'lambda-Mittag-Leffler sequence as a double sum'
    EQ51 = 'EQ51', 'Daehee polynomials of the second kind'
    EQ53_TSTAR = 'EQ53_TSTAR', 'Associated sequence of 2t/(1+t^2)'
    EQ13_CONV = 'EQ13_CONV', 'Binomial convolution for Sheffer sequences'
    EQ9_MULTI = 'EQ9_MULTI', 'Multinomial expansion of a product pairing'


CONVOLUTION_POINTS = (0, 1, -1, Fraction(1, 2))


@dataclass(frozen=True)
class Variant:
    name: str
    description: str
    steps: object


@dataclass(frozen=True)
class Identity:
    """One registry entry; steps and variant steps map (context, n) to [(name, lhs, rhs)]."""

    id: IdentityId
    statement: str
    n_min: int = 0
    steps: object = None
    variants: tuple = ()
    defaults: tuple = ()
    nonzero: tuple = ()

    def resolve_params(self, params):
        params = dict(params or {})
        allowed = dict(self.defaults)
        for key, value in params.items():
            if key not in allowed:
                raise IdentityParameterError(f"identity {self.id.value} takes no parameter {key}")
            if isinstance(value, bool) or not isinstance(value, int):
                raise IdentityParameterError(f"parameter {key} must be an integer, got {value!r}")
            if key in self.nonzero:
                if value == 0:
                    raise IdentityParameterError(f"parameter {key} must be nonzero")
            elif value < 0:
                raise IdentityParameterError(f"parameter {key} must be >= 0, got {value}")
        return {**allowed, **params}


class VerificationContext:
    """Family sequences and intermediate results shared by the degrees of one run."""

    def __init__(self, n_max, params):
        self.n_max = n_max
        self.params = params
        self._memo = {}

    def memo(self, key, build):
        if key not in self._memo:
            self._memo[key] = build()
        return self._memo[key]

    def sequence(self, kind, order=None):
        fid = FamilyId(kind, order)
        return self.memo(fid, lambda: family_sequence(fid, self.n_max))

    def family(self, kind, n, order=None):
        return self.sequence(kind, order)[n]

    def bernoulli(self, order, n):
        return self.family(FamilyKind.BERNOULLI, n, order)

    def bernoulli_number(self, order, n):
        return self.bernoulli(order, n).coeff(0)

    def frobenius_euler(self, order, n):
        return self.family(FamilyKind.FROBENIUS_EULER, n, order)


# Building blocks

def _x(p):
    return mul_by_x(p)


def _lam(p):
    return p.convert(LAMBDA)


def _apply(f, p):
    f, p = lift(f, p)
    return apply_series(f, p)


def _total(field, terms):
    total = Poly.zero(field)
    for term in terms:
        total = total + term
    return total


def _power(n):
    return Poly.monomial(RATIONALS, n)


def _neg_lambda(k):
    return (-LAMBDA.generator()) ** k


@lru_cache(maxsize=None)
def _fe_power(precision, k):
    """((1 - lambda) / (e^t - lambda))^k, k of either sign."""
    return series_pow_int(frobenius_euler_kernel(precision), k)


@lru_cache(maxsize=None)
def _bk_inverse_power(precision, k):
    """((e^t - 1) / t)^k."""
    return series_pow_int(bernoulli_kernel_inverse(RATIONALS, precision), k)


# Theorem 1 and (20)

def _thm1(ctx, n):
    s_n = ctx.family(FamilyKind.ASSOC_S, n)
    p = max(n + 1, 2)
    via_transfer = transfer({n: _power(n)}, t_series(RATIONALS, p), assoc_s_delta(p), n)
    return [
        ('closed-form', s_n, assoc_s_closed(n)),
        ('transfer', s_n, via_transfer),
    ]


def _eq20(ctx, n):
    s_n = ctx.family(FamilyKind.ASSOC_S, n)
    p = n + 1
    lam = LAMBDA.generator()
    scale = one_minus_lambda() ** (-n)
    x_low = _power(n - 1)
    ratio = transfer_operator(t_series(RATIONALS, p), assoc_s_delta(p), n)
    binomial = series_pow_int(exp_series(LAMBDA, p) - lam, n)
    expanded = _total(LAMBDA, (
        _apply(exp_series(LAMBDA, p, l), x_low) * (comb(n, l) * _neg_lambda(n - l))
        for l in range(n + 1)
    ))
    return [
        ('transfer-operator', s_n, _x(_apply(ratio, x_low))),
        ('binomial-power', s_n, _x(_apply(binomial, x_low)) * scale),
        ('binomial-operator', s_n, _x(expanded) * scale),
        ('shifted-power', s_n, assoc_s_closed(n)),
    ]


# (17), (18) and the (21)-(24) chain

def _eq18(ctx, n):
    m_n = ctx.family(FamilyKind.MITTAG_LEFFLER, n)
    d_n = ctx.family(FamilyKind.DAEHEE, n)
    return [
        ('closed-form', m_n, mittag_leffler_closed(n)),
        ('operator', m_n, _apply(_fe_power(n + 1, 1), d_n)),
    ]


def _chain_coefficient(n, l, j):
    """C(n, l) C(n, j) (-lambda)^{n-j} / (1 - lambda)^n."""
    return comb(n, l) * comb(n, j) * _neg_lambda(n - j) * one_minus_lambda() ** (-n)


def _triple_sum(ctx, n, term):
    """
    (n-1)! sum_{l>=1} sum_j sum_{m<l} C(n,l) C(n,j) C(l-1,m) (-lambda)^{n-j} 2^l / ((l-1)! (1-lambda)^n)
    B_{l-1-m}^{(l)} term(m, j).
    """
    total = Poly.zero(LAMBDA)
    for l in range(1, n + 1):
        for j in range(n + 1):
            c = _chain_coefficient(n, l, j) * 2 ** l
            for m in range(l):
                weight = ctx.bernoulli_number(l, l - 1 - m) * comb(l - 1, m) * Fraction(factorial(n - 1), factorial(l - 1))
                if weight == 0:
                    continue
                total = total + (term(m, j) * c).scale(weight)
    return total


def _eq24_sum(ctx, n):
    return ctx.memo(('eq24', n), lambda: _triple_sum(
        ctx, n, lambda m, j: poly_shift(ctx.frobenius_euler(n, m), j),
    ))


def _eq21_24(ctx, n):
    m_n = ctx.family(FamilyKind.MITTAG_LEFFLER, n)
    p = n + 1
    fe_n = _fe_power(p, n)
    shifted = [shifted_power(RATIONALS, j, n - 1) for j in range(n + 1)]
    two_b = bernoulli_kernel(RATIONALS, p) * 2

    rearranged = substituted = reduced = expanded = Poly.zero(LAMBDA)
    for l in range(n + 1):
        op = series_mul(Series.monomial(RATIONALS, n - l, p), series_pow_int(two_b, l))
        for j in range(n + 1):
            c = _chain_coefficient(n, l, j)
            rearranged = rearranged + _lam(apply_series(op, shifted[j])) * c
            b = poly_shift(ctx.bernoulli(l, n - 1), j)
            substituted = substituted + _lam(poly_derivative(b, n - l)) * (c * 2 ** l)
            if l == 0:
                continue
            low = poly_shift(ctx.bernoulli(l, l - 1), j)
            reduced = reduced + _lam(low) * (c * 2 ** l * falling(n - 1, n - l))
            expansion = _total(RATIONALS, (
                shifted_power(RATIONALS, j, m).scale(ctx.bernoulli_number(l, l - 1 - m) * comb(l - 1, m))
                for m in range(l)
            ))
            expanded = expanded + (_lam(expansion) * (c * 2 ** l)).scale(Fraction(factorial(n - 1), factorial(l - 1)))

    via_transfer = transfer(
        ctx.sequence(FamilyKind.ASSOC_S), assoc_s_delta(p), daehee_delta(RATIONALS, p), n,
    )
    return [
        ('transfer', m_n, via_transfer),
        ('operator-rearrangement', m_n, _x(_apply(fe_n, rearranged))),
        ('bernoulli-substitution', m_n, _x(_apply(fe_n, substituted))),
        ('degree-reduction', m_n, _x(_apply(fe_n, reduced))),
        ('bernoulli-expansion', m_n, _x(_apply(fe_n, expanded))),
        ('frobenius-euler-substitution', m_n, _x(_eq24_sum(ctx, n))),
    ]


# Theorem 2 / (26)

def _daehee_operator(ctx, n):
    d_n = ctx.family(FamilyKind.DAEHEE, n)
    m_n = ctx.family(FamilyKind.MITTAG_LEFFLER, n)
    return [('operator', d_n, _apply(frobenius_euler_kernel_inverse(n + 1), m_n))]


def _eq26_sum(ctx, n):
    inv = one_minus_lambda().inverse()

    def term(m, j):
        return (
            _x(poly_shift(ctx.frobenius_euler(n - 1, m), j))
            + poly_shift(ctx.frobenius_euler(n, m), j + 1) * inv
        )

    return ctx.memo(('eq26', n), lambda: _triple_sum(ctx, n, term))


def _thm2_printed(ctx, n):
    return [('closed-form', ctx.family(FamilyKind.DAEHEE, n), _x(_eq26_sum(ctx, n)))]


def _thm2_pincherle(ctx, n):
    return [('closed-form', ctx.family(FamilyKind.DAEHEE, n), _eq26_sum(ctx, n))]


# Remark (a), (b): (27)-(31)

def _eq28_delta(precision):
    """t / (e^t + 1)."""
    return series_div(t_series(RATIONALS, precision), exp_series(RATIONALS, precision) + 1)


def _eq28_sequence(ctx):
    return ctx.memo('eq28', lambda: associated_sequence(_eq28_delta(ctx.n_max + 1), ctx.n_max))


def _eq28(ctx, n):
    s_n = _eq28_sequence(ctx)[n]
    p = n + 1
    operator = series_pow_int(exp_series(RATIONALS, p) + 1, n)
    closed = _total(RATIONALS, (shifted_power(RATIONALS, j, n - 1) * comb(n, j) for j in range(n + 1)))
    return [
        ('transfer', s_n, _x(apply_series(operator, _power(n - 1)))),
        ('closed-form', s_n, _x(closed)),
    ]


def _eq29(ctx, n):
    m_n = ctx.family(FamilyKind.MITTAG_LEFFLER, n)
    p = n + 1
    b = ctx.bernoulli(n, n - 1)
    closed = _total(RATIONALS, (_x(poly_shift(b, j)) * comb(n, j) for j in range(n + 1)))
    via_transfer = transfer(_eq28_sequence(ctx), _eq28_delta(p), daehee_delta(RATIONALS, p), n)
    return [
        ('transfer', m_n, via_transfer),
        ('closed-form', m_n, closed),
    ]


def _eq30(first_index):
    def steps(ctx, n):
        lam = LAMBDA.generator()
        x_plus_one = poly_shift(_power(1), 1)
        tail = ctx.bernoulli(n, n - 1)
        first = _total(RATIONALS, (
            x_plus_one * poly_shift(ctx.bernoulli(n, first_index(n, j)), j + 1) * comb(n, j)
            for j in range(n + 1)
        ))
        second = _total(RATIONALS, (_x(poly_shift(tail, j)) * comb(n, j) for j in range(n + 1)))
        rhs = _lam(first) * one_minus_lambda().inverse() + _lam(second) * (lam / (lam - 1))
        return [('closed-form', ctx.family(FamilyKind.DAEHEE, n), rhs)]

    return steps


def _eq31(ctx, n):
    d_n = ctx.family(FamilyKind.DAEHEE, n)
    inverse = frobenius_euler_kernel_inverse(n + 1)
    operator_form = _total(LAMBDA, (
        _apply(inverse, falling_factorial(k)) * (comb(n, k) * falling(n - 1, n - k) * 2 ** k)
        for k in range(n + 1)
    ))
    return [
        ('operator-form', d_n, operator_form),
        ('closed-form', d_n, daehee_closed(n)),
    ]


# Theorem 3: Changhee polynomials

def _thm3_common(ctx, n):
    return [('falling-factorial', _x(ctx.bernoulli(n, n - 1)), falling_factorial(n))]


def _thm3_variant(sign, reciprocal):
    def steps(ctx, n):
        a = ctx.params['a']
        c_n = ctx.family(FamilyKind.CHANGHEE, n, a)
        xb = _x(ctx.bernoulli(n, n - 1))
        return [
            ('operator', _apply(_fe_power(n + 1, sign * a), c_n), xb),
            ('closed-form', c_n, changhee_closed(a, n, reciprocal=reciprocal)),
        ]

    return steps


# Theorem 4, (39)-(43), Theorem 5

def _thm4_common(ctx, n):
    a = ctx.params['a']
    xh = _x(ctx.frobenius_euler(a * n, n - 1))
    return [('transfer', xh, _x(_apply(_fe_power(n + 1, a * n), _power(n - 1))))]


def _thm4_variant(sign):
    def steps(ctx, n):
        a = ctx.params['a']
        precision = ctx.n_max + 1

        def build():
            delta = series_mul(t_series(LAMBDA, precision), _fe_power(precision, sign * a))
            return associated_sequence(delta, ctx.n_max)

        seq = ctx.memo(('thm4', sign, a), build)
        return [('associated-sequence', seq[n], _x(ctx.frobenius_euler(a * n, n - 1)))]

    return steps


def _eq39(ctx, n):
    b = ctx.params['b']
    precision = ctx.n_max + 1
    seq = ctx.memo(('eq39', b), lambda: associated_sequence(
        series_mul(t_series(RATIONALS, precision), _bk_inverse_power(precision, b)), ctx.n_max,
    ))
    xb = _x(ctx.bernoulli(b * n, n - 1))
    operator = series_pow_int(bernoulli_kernel(RATIONALS, n + 1), b * n)
    return [
        ('associated-sequence', seq[n], xb),
        ('transfer', xb, _x(apply_series(operator, _power(n - 1)))),
    ]


def _eq40_common(ctx, n):
    a, b = ctx.params['a'], ctx.params['b']
    p = n + 1
    h = ctx.frobenius_euler(a * n, n - 1)
    bb = ctx.bernoulli(b * n, n - 1)
    f_b = series_mul(t_series(RATIONALS, p), _bk_inverse_power(p, b))
    f_h = series_mul(t_series(LAMBDA, p), _fe_power(p, -a))
    return [
        ('eq41', _apply(_fe_power(p, -a * n), h), apply_series(_bk_inverse_power(p, b * n), bb)),
        ('transfer', _x(h), transfer({n: _x(bb)}, f_b, f_h, n)),
    ]


def _eq40_variant(bernoulli_order):
    def steps(ctx, n):
        a, b = ctx.params['a'], ctx.params['b']
        p = n + 1
        operator = series_mul(*lift(_fe_power(p, a * n), _bk_inverse_power(p, b * n)))
        b_poly = ctx.bernoulli(bernoulli_order(a, b, n), n - 1)
        return [('operator-form', _x(ctx.frobenius_euler(a * n, n - 1)), _x(_apply(operator, b_poly)))]

    return steps


def _thm5(ctx, n):
    a, b = ctx.params['a'], ctx.params['b']
    an, bn = a * n, b * n
    h = ctx.frobenius_euler(an, n - 1)
    lhs = _total(LAMBDA, (poly_shift(h, j) * (comb(an, j) * _neg_lambda(an - j)) for j in range(an + 1)))
    scale = one_minus_lambda() ** an
    stirling_sum = _total(RATIONALS, (
        ctx.bernoulli(bn, n - 1 - j).scale(
            Fraction(factorial(bn) * factorial(n - 1), factorial(j + bn) * factorial(n - j - 1)) * stirling2(j + bn, bn)
        )
        for j in range(n)
    ))
    operator_form = apply_series(_bk_inverse_power(n + 1, bn), ctx.bernoulli(bn, n - 1))
    return [
        ('stirling-sum', lhs, _lam(stirling_sum) * scale),
        ('operator-form', lhs, _lam(operator_form) * scale),
    ]


# Remark (44)-(45)

def _remark45_common(ctx, n):
    s_n = ctx.family(FamilyKind.REMARK_S44, n)
    return [('operator', _apply(_fe_power(n + 1, 1), s_n), ctx.family(FamilyKind.ASSOC_S, n))]


def _remark45_variant(order_sign):
    def steps(ctx, n):
        return [('closed-form', ctx.family(FamilyKind.REMARK_S44, n), remark_s44_form(n, order_sign))]

    return steps


# Theorem 6, (50), (51)

def _thm6(ctx, n):
    ms = ctx.family(FamilyKind.MITTAG_LEFFLER_LAMBDA, n)
    p = n + 1
    lam = LAMBDA.generator()
    base = series_mul(exp_series(LAMBDA, p) - lam, bernoulli_kernel(RATIONALS, p).convert(LAMBDA))
    b = _lam(ctx.bernoulli(n, n - 1))
    binomial = _total(LAMBDA, (
        apply_series(exp_series(LAMBDA, p, l), b) * (comb(n, l) * _neg_lambda(n - l))
        for l in range(n + 1)
    ))
    return [
        ('transfer', ms, _x(_apply(series_pow_int(base, n), _power(n - 1)))),
        ('binomial-operator', ms, _x(binomial)),
        ('closed-form', ms, mittag_leffler_lambda_closed(n)),
    ]


def _eq50(ctx, n):
    ms = ctx.family(FamilyKind.MITTAG_LEFFLER_LAMBDA, n)
    total = Poly.zero(LAMBDA)
    for l in range(n + 1):
        inner = _total(RATIONALS, (
            shifted_power(RATIONALS, l, j).scale(ctx.bernoulli_number(n, n - 1 - j) * comb(n - 1, j))
            for j in range(n)
        ))
        total = total + _lam(inner) * (comb(n, l) * _neg_lambda(n - l))
    return [('double-sum', ms, _x(total))]


def _eq51_common(ctx, n):
    ds = ctx.family(FamilyKind.DAEHEE2, n)
    ms = ctx.family(FamilyKind.MITTAG_LEFFLER_LAMBDA, n)
    return [('operator', ds, _apply(frobenius_euler_kernel_inverse(n + 1), ms))]


def _eq51_variant(closed):
    def steps(ctx, n):
        return [('closed-form', ctx.family(FamilyKind.DAEHEE2, n), closed(n))]

    return steps


# (52)-(53)

def _eq53(ctx, n):
    tt = ctx.family(FamilyKind.ASSOC_T, n)
    p = n + 1
    via_gf = exponential_family(Series.one(RATIONALS, p), tstar_inverse(RATIONALS, p), n)[n]
    half = Series.from_ordinary(RATIONALS, [Fraction(1, 2), 0, Fraction(1, 2)], p)
    return [
        ('generating-function', tt, via_gf),
        ('transfer', tt, _x(apply_series(series_pow_int(half, n), _power(n - 1)))),
        ('closed-form', tt, tstar_closed(n)),
    ]


# Machinery: (13) and (9)

def _eq13(ctx, n):
    steps = []
    families = (
        ('daehee', FamilyKind.DAEHEE, None),
        ('changhee', FamilyKind.CHANGHEE, ctx.params['a']),
    )
    for label, kind, order in families:
        seq = ctx.sequence(kind, order)
        for y in CONVOLUTION_POINTS:
            for swapped in (False, True):
                lhs, rhs = binomial_convolution_sides(seq, seq.pair.g, n, y, swapped)
                form = 'mirrored' if swapped else 'direct'
                steps.append((f"{label} y={y} {form}", lhs, rhs))
    return steps


def _eq9(ctx, n):
    p = n + 1
    factor_lists = (
        (exp_series(RATIONALS, p, 2),),
        (frobenius_euler_kernel(p), daehee_delta(RATIONALS, p)),
        (exp_minus_one(RATIONALS, p), bernoulli_kernel(RATIONALS, p), log1p(RATIONALS, p)),
    )
    steps = []
    for fs in factor_lists:
        direct, expanded = multinomial_sides(fs, n)
        field = field_of(direct)
        steps.append((f"m={len(fs)}", Poly.constant(field, direct), Poly.constant(field, expanded)))
    return steps


REGISTRY = {
    entry.id: entry
    for entry in (
        Identity(
            IdentityId.THM1,
            'S_n(x|lambda) = x/(1-lambda)^n sum_l C(n,l) (-lambda)^{n-l} (x+l)^{n-1}; the quantified '
            'index r is read as the degree n, and n = 0 gives S_0 = 1',
            steps=_thm1,
        ),
        Identity(
            IdentityId.EQ18,
            'M_n(x) = sum_k C(n,k) (n-1)_{n-k} 2^k (x)_k = (1-lambda)/(e^t-lambda) D_n(x|lambda)',
            steps=_eq18,
        ),
        Identity(
            IdentityId.EQ20,
            'each printed line of the transfer chain for S_n(x|lambda)',
            n_min=1,
            steps=_eq20,
        ),
        Identity(
            IdentityId.EQ21_24_CHAIN,
            'M_n(x) from S_n(x|lambda) by transfer, one step per printed line',
            n_min=1,
            steps=_eq21_24,
        ),
        Identity(
            IdentityId.THM2_EQ26,
            'D_n(x|lambda) = (e^t-lambda)/(1-lambda) M_n(x) as a triple sum of Bernoulli numbers '
            'and Frobenius-Euler polynomials',
            n_min=1,
            steps=_daehee_operator,
            variants=(
                Variant('printed', 'the statement with the factor x before the braces', _thm2_printed),
                Variant('pincherle-form', 'the sum without the extra factor x', _thm2_pincherle),
            ),
        ),
        Identity(
            IdentityId.EQ28,
            'S_n(x) ~ (1, t/(e^t+1)) equals x (e^t+1)^n x^{n-1} = x sum_j C(n,j) (x+j)^{n-1}',
            n_min=1,
            steps=_eq28,
        ),
        Identity(
            IdentityId.EQ29,
            'M_n(x) = x (t/(e^t-1))^n x^{-1} S_n(x) = sum_j C(n,j) x B_{n-1}^{(n)}(x+j)',
            n_min=1,
            steps=_eq29,
        ),
        Identity(
            IdentityId.EQ30,
            'D_n(x|lambda) = 1/(1-lambda) sum_j C(n,j) (x+1) B^{(n)}(x+j+1) '
            '+ lambda/(lambda-1) sum_j C(n,j) x B_{n-1}^{(n)}(x+j)',
            n_min=1,
            steps=_daehee_operator,
            variants=(
                Variant('printed', 'B_{n-1}^{(n)} in both sums', _eq30(lambda n, j: n - 1)),
                Variant('first-sum-index-n-j', 'B_{n-j}^{(n)} in the first sum', _eq30(lambda n, j: n - j)),
            ),
        ),
        Identity(
            IdentityId.EQ31,
            'D_n(x|lambda) = 1/(1-lambda) sum_k C(n,k) (n-1)_{n-k} 2^k ((x+1)_k - lambda (x)_k)',
            steps=_eq31,
        ),
        Identity(
            IdentityId.THM3_EQ36,
            'C_n^{(a)}(x|lambda) = sum_l C(n-1,l) B_l^{(n)} {x H^{(a)}_{n-1-l}(x|lambda) '
            '- a/(1-lambda) H^{(a+1)}_{n-1-l}(x+1|lambda)}, with x B_{n-1}^{(n)}(x) = (x)_n',
            n_min=1,
            steps=_thm3_common,
            variants=(
                Variant(
                    'printed',
                    '((e^t-lambda)/(1-lambda))^a C_n^{(a)} = x B_{n-1}^{(n)}(x) and the sum as printed',
                    _thm3_variant(-1, False),
                ),
                Variant(
                    'reciprocal-operator',
                    '((1-lambda)/(e^t-lambda))^a C_n^{(a)} = x B_{n-1}^{(n)}(x) and the sum '
                    '{x H^{(-a)}_{n-1-l}(x) + a/(1-lambda) H^{(1-a)}_{n-1-l}(x+1)}',
                    _thm3_variant(1, True),
                ),
            ),
            defaults=(('a', 2),),
            nonzero=('a',),
        ),
        Identity(
            IdentityId.THM4_EQ38,
            'x H_{n-1}^{(an)}(x|lambda) = x ((1-lambda)/(e^t-lambda))^{an} x^{n-1} is an associated sequence',
            n_min=1,
            steps=_thm4_common,
            variants=(
                Variant('printed-pair', 'associated to t ((1-lambda)/(e^t-lambda))^a', _thm4_variant(1)),
                Variant('eq37-pair', 'associated to t ((e^t-lambda)/(1-lambda))^a', _thm4_variant(-1)),
            ),
            defaults=(('a', 1),),
        ),
        Identity(
            IdentityId.EQ39,
            'x B_{n-1}^{(bn)}(x) ~ (1, t ((e^t-1)/t)^b)',
            n_min=1,
            steps=_eq39,
            defaults=(('b', 2),),
        ),
        Identity(
            IdentityId.EQ40_41,
            'x H_{n-1}^{(an)}(x|lambda) = x ((1-lambda)/(e^t-lambda))^{an} ((e^t-1)/t)^{bn} B_{n-1}(x), '
            'and both operator images equal x^{n-1}',
            n_min=1,
            steps=_eq40_common,
            variants=(
                Variant('printed', 'B_{n-1}^{(an)} in the operator form', _eq40_variant(lambda a, b, n: a * n)),
                Variant('superscript-bn', 'B_{n-1}^{(bn)} in the operator form', _eq40_variant(lambda a, b, n: b * n)),
            ),
            defaults=(('a', 1), ('b', 2)),
        ),
        Identity(
            IdentityId.THM5,
            'sum_j C(an,j) (-lambda)^{an-j} H_{n-1}^{(an)}(x+j|lambda) = (1-lambda)^{an} (n-1)! '
            'sum_j (bn)! S2(j+bn,bn) / ((j+bn)! (n-j-1)!) B_{n-1-j}^{(bn)}(x); the two sides are bound '
            'by content, their captions read "LHS of (40)" and "RHS of (41)"',
            n_min=1,
            steps=_thm5,
            defaults=(('a', 1), ('b', 2)),
        ),
        Identity(
            IdentityId.REMARK45,
            'S_n(x|lambda) = 1/(1-lambda) {(x+1) H_{n-1}(x+1|lambda) - lambda x H_{n-1}(x|lambda)}',
            n_min=1,
            steps=_remark45_common,
            variants=(
                Variant('printed', 'Frobenius-Euler order n', _remark45_variant(1)),
                Variant('negative-order', 'Frobenius-Euler order -n', _remark45_variant(-1)),
            ),
        ),
        Identity(
            IdentityId.THM6_EQ49,
            'M*_n(x|lambda) = sum_l C(n,l) (-lambda)^{n-l} x B_{n-1}^{(n)}(x+l)',
            n_min=1,
            steps=_thm6,
        ),
        Identity(
            IdentityId.EQ50,
            'M*_n(x|lambda) = x sum_l sum_j C(n,l) C(n-1,j) (-lambda)^{n-l} B_{n-1-j}^{(n)} (x+l)^j',
            n_min=1,
            steps=_eq50,
        ),
        Identity(
            IdentityId.EQ51,
            'D*_n(x|lambda) = 1/(1-lambda) sum_j C(n,j) {(x+1) B^{(n)}(x+1+j) - lambda x B_{n-1}^{(n)}(x+j)} '
            '(-lambda)^{n-j}',
            n_min=1,
            steps=_eq51_common,
            variants=(
                Variant('printed', 'B_{n-j}^{(n)} in the first term', _eq51_variant(daehee2_printed)),
                Variant('theorem6-index', 'B_{n-1}^{(n)} in the first term', _eq51_variant(daehee2_closed)),
            ),
        ),
        Identity(
            IdentityId.EQ53_TSTAR,
            'T*_n(x) from exp(x (1 - sqrt(1-t^2))/t), from x ((1+t^2)/2)^n x^{n-1} and as a closed sum',
            n_min=1,
            steps=_eq53,
        ),
        Identity(
            IdentityId.EQ13_CONV,
            'S_n(x+y) = sum_k C(n,k) p_k(y) S_{n-k}(x) = sum_k C(n,k) S_{n-k}(y) p_k(x) '
            'for the Daehee and Changhee pairs',
            steps=_eq13,
            defaults=(('a', 2),),
            nonzero=('a',),
        ),
        Identity(
            IdentityId.EQ9_MULTI,
            '<f_1(t) ... f_m(t) | x^n> = sum of multinomial C(n; i_1..i_m) <f_1 | x^{i_1}> ... <f_m | x^{i_m}>',
            steps=_eq9,
        ),
    )
}


def get_identity(identity_id):
    try:
        return REGISTRY[IdentityId(identity_id)]
    except ValueError:
        raise UnknownIdentity(f"unknown identity: {identity_id}")


def spot_lambdas():
    return tuple(getattr(settings, 'UMBRA_SPOT_LAMBDAS', (Fraction(-1), Fraction(2))))


class _SpotTally:
    """Re-checks symbolically passing lambda steps at numeric values of lambda."""

    def __init__(self, identity_id, values):
        self.identity_id = identity_id
        self.values = values
        self.checked = {v: 0 for v in values}
        self.disagreements = {v: [] for v in values}

    def record(self, n, name, lhs, rhs):
        lhs, rhs = lift(lhs, rhs)
        if lhs.field is not LAMBDA:
            return
        for v in self.values:
            try:
                agree = lhs.specialize(v) == rhs.specialize(v)
            except PoleError:
                continue
            self.checked[v] += 1
            if not agree:
                logger.warning(f"{self.identity_id}: step {name} at n = {n} passes symbolically but not at lambda = {v}")
                self.disagreements[v].append((n, name))

    def results(self):
        return tuple(
            SpotCheck(v, self.checked[v], tuple(self.disagreements[v]))
            for v in self.values if self.checked[v]
        )


def _run_steps(n, steps, tally):
    """First mismatch among the steps, spot-checking the ones that pass."""
    for name, lhs, rhs in steps:
        mismatch = compare_polys(lhs, rhs, name)
        if mismatch is not None:
            logger.debug(f"step {name} fails at n = {n}, x^{mismatch.x_power}")
            return mismatch
        if tally is not None:
            tally.record(n, name, lhs, rhs)
    return None


def _variant_note(results):
    matched = [r for r in results if r.matched]
    if len(matched) == 1:
        chosen = matched[0]
        others = [
            f"{r.name} fails from n = {next(d.n for d in r.per_degree if not d.passed)}"
            for r in results if r is not chosen
        ]
        return chosen, f"{chosen.name} matches at every tested degree; " + '; '.join(others)
    if not matched:
        return results[0], 'no registered variant matches at every tested degree'
    names = ', '.join(r.name for r in matched)
    return results[0], f"{names} all match at every tested degree"


def verify(identity_id, n_max, params=None, spot_check=True, spot_values=None):
    """
    Check one identity at degrees n_min .. n_max.

    Args:
        identity_id: IdentityId or its value
        n_max: last degree, at least the identity's first degree
        params: integer parameters (a, b) where the identity takes them
        spot_check: also compare lambda steps at numeric values of lambda
        spot_values: those values; UMBRA_SPOT_LAMBDAS when None

    Returns:
        IdentityReport
    """
    identity = get_identity(identity_id)
    params = identity.resolve_params(params)
    if isinstance(n_max, bool) or not isinstance(n_max, int):
        raise IdentityParameterError(f"n_max must be an integer, got {n_max!r}")
    if n_max < identity.n_min:
        raise IdentityParameterError(f"{identity.id.value} needs n_max >= {identity.n_min}, got {n_max}")

    logger.info(f"verifying {identity.id.value} for n = {identity.n_min}..{n_max} with {params}")
    ctx = VerificationContext(n_max, params)
    if spot_values is None:
        spot_values = spot_lambdas()
    tally = _SpotTally(identity.id.value, tuple(spot_values)) if spot_check else None
    plain = []
    variant_rows = {v.name: [] for v in identity.variants}
    for n in range(identity.n_min, n_max + 1):
        common = _run_steps(n, identity.steps(ctx, n), tally) if identity.steps else None
        if not identity.variants:
            plain.append(DegreeVerdict.from_mismatch(n, common))
        for variant in identity.variants:
            mismatch = common or _run_steps(n, variant.steps(ctx, n), tally)
            variant_rows[variant.name].append(DegreeVerdict.from_mismatch(n, mismatch))

    variants = tuple(
        VariantResult(v.name, v.description, tuple(variant_rows[v.name])) for v in identity.variants
    )
    note = None
    per_degree = tuple(plain)
    if variants:
        chosen, note = _variant_note(variants)
        per_degree = chosen.per_degree
        if not any(v.matched for v in variants):
            logger.warning(f"{identity.id.value}: {note}")

    report = IdentityReport(
        id=identity.id.value,
        params=params,
        per_degree=per_degree,
        variant_note=note,
        variants=variants,
        spot_checks=tally.results() if tally is not None else (),
    )
    logger.info(
        f"{identity.id.value}: {len(per_degree) - len(report.failed_degrees)} of {len(per_degree)} degrees pass"
    )
    return report


def verify_all(n_max, spot_check=True, spot_values=None):
    """Every registry entry with default parameters, in IdentityId order."""
    reports = []
    for identity_id in IdentityId:
        identity = REGISTRY[identity_id]
        reports.append(
            verify(identity_id, max(n_max, identity.n_min), spot_check=spot_check, spot_values=spot_values)
        )
    failed = [r.id for r in reports if not r.passed]
    logger.info(f"verify-all to n = {n_max}: {len(reports) - len(failed)} of {len(reports)} identities pass")
    return reports
