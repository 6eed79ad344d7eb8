"""
Truncated formal power series in t over an exact scalar field.

A Series holds a_0 .. a_{N-1} of f(t) = sum a_k t^k / k!  (exponential
convention, N = precision). With this convention the pairing <f(t) | x^n>
is the coefficient lookup a_n, differentiation in t is an index shift, and
products are binomial convolutions:

    (f g)_n = sum_k C(n, k) f_k g_{n-k}

Operations never return fewer coefficients than the precision rules below
promise; when an input cannot support the request they raise.

Cost envelope: products are O(N^2) scalar operations, composition and
compositional inversion O(N^3). Intended for N up to a few dozen.
"""
import logging
from fractions import Fraction
from math import comb, factorial

from django.db import models

from coefficients.exceptions import (
    DivisionByZero,
    NotDelta,
    NotInvertible,
    OrderUndefined,
    PrecisionError,
    QuotientNotSeries,
    SeriesDomainError,
)
from coefficients.fields import RATIONALS, common_field

logger = logging.getLogger(__name__)


class SeriesClass(models.TextChoices):
    DELTA = 'delta', 'Delta series (order 1)'
    INVERTIBLE = 'invertible', 'Invertible series (order 0)'
    OTHER = 'other', 'Other'


class Series:
    """Immutable truncated series sum a_k t^k / k!, k < precision."""

    __slots__ = ('field', 'coeffs')

    def __init__(self, field, coeffs):
        coeffs = tuple(field.coerce(c) for c in coeffs)
        if not coeffs:
            raise PrecisionError('a series needs precision >= 1')
        object.__setattr__(self, 'field', field)
        object.__setattr__(self, 'coeffs', coeffs)

    def __setattr__(self, name, value):
        raise AttributeError('Series is immutable')

    @classmethod
    def _raw(cls, field, coeffs):
        obj = object.__new__(cls)
        object.__setattr__(obj, 'field', field)
        object.__setattr__(obj, 'coeffs', tuple(coeffs))
        return obj

    # Constructors

    @classmethod
    def constant(cls, field, value, precision):
        value = field.coerce(value)
        return cls._raw(field, (value,) + (field.zero,) * (precision - 1))

    @classmethod
    def one(cls, field, precision):
        return cls.constant(field, 1, precision)

    @classmethod
    def variable(cls, field, precision):
        """The series t."""
        coeffs = [field.zero] * precision
        if precision > 1:
            coeffs[1] = field.one
        return cls._raw(field, coeffs)

    @classmethod
    def monomial(cls, field, k, precision):
        """The series t^k (a_k = k!)."""
        coeffs = [field.zero] * precision
        if k < precision:
            coeffs[k] = field.coerce(factorial(k))
        return cls._raw(field, coeffs)

    @classmethod
    def exponential(cls, field, y, precision):
        """The series e^{y t} (a_k = y^k)."""
        y = field.coerce(y)
        coeffs = [field.one]
        for _ in range(1, precision):
            coeffs.append(coeffs[-1] * y)
        return cls._raw(field, coeffs)

    @classmethod
    def from_ordinary(cls, field, ordinary, precision=None):
        """Build from ordinary coefficients c_k of sum c_k t^k (a_k = k! c_k)."""
        ordinary = [field.coerce(c) for c in ordinary]
        if precision is None:
            precision = len(ordinary)
        coeffs = []
        for k in range(precision):
            c = ordinary[k] if k < len(ordinary) else field.zero
            coeffs.append(field.scale(c, factorial(k)))
        return cls._raw(field, coeffs)

    # Structure

    @property
    def precision(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def ordinary(self, k):
        """Coefficient of t^k in ordinary form (a_k / k!)."""
        return self.field.scale(self.coeffs[k], Fraction(1, factorial(k)))

    def truncate(self, precision):
        if precision > self.precision:
            raise PrecisionError(
                f"insufficient precision: need {precision}, series has {self.precision}"
            )
        return Series._raw(self.field, self.coeffs[:precision])

    def is_zero(self):
        return all(self.field.is_zero(c) for c in self.coeffs)

    def convert(self, field):
        """Embed a rational series into another field."""
        if field is self.field:
            return self
        return Series(field, self.coeffs)

    def specialize(self, v):
        """Evaluate every coefficient at lambda = v."""
        return Series._raw(RATIONALS, (self.field.specialize(c, v) for c in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.name, self.coeffs))

    def __repr__(self):
        return f"Series({self.field.name}, precision={self.precision})"

    # Operators

    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_add(self, -other)

    def __neg__(self):
        return series_scalar_mul(self, -1)

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_mul(self, other)
        return series_scalar_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return series_div(self, other)

    def __pow__(self, k):
        return series_pow_int(self, k)


def _check_same_field(a, b):
    return common_field(a.field, b.field)


def _as_series(value, field, precision):
    if isinstance(value, Series):
        return value
    return Series.constant(field, value, precision)


def series_add(a, b):
    """Sum; result precision is the smaller of the two."""
    b = _as_series(b, a.field, a.precision)
    field = _check_same_field(a, b)
    n = min(a.precision, b.precision)
    return Series._raw(field, (a.coeffs[k] + b.coeffs[k] for k in range(n)))


def series_scalar_mul(a, c):
    """Multiply every coefficient by a scalar of the series' field (or an int)."""
    if not isinstance(c, int):
        a.field.check(c)
    return Series._raw(a.field, (x * c for x in a.coeffs))


def _convolve(field, a, b, n):
    """Exponential convolution of two coefficient tuples, first n terms."""
    lo_a = next((k for k, c in enumerate(a[:n]) if not field.is_zero(c)), n)
    lo_b = next((k for k, c in enumerate(b[:n]) if not field.is_zero(c)), n)
    out = []
    for m in range(n):
        if m < lo_a + lo_b:
            out.append(field.zero)
            continue
        out.append(field.sum_products(
            (comb(m, k), a[k], b[m - k]) for k in range(lo_a, m - lo_b + 1)
        ))
    return out


def series_mul(a, b):
    """Product; result precision is the smaller of the two."""
    if not isinstance(b, Series):
        return series_scalar_mul(a, b)
    field = _check_same_field(a, b)
    n = min(a.precision, b.precision)
    return Series._raw(field, _convolve(field, a.coeffs, b.coeffs, n))


def order(s):
    """Smallest k with a_k != 0."""
    for k, c in enumerate(s.coeffs):
        if not s.field.is_zero(c):
            return k
    raise OrderUndefined('order undefined at this precision')


def classify(s):
    k = order(s)
    if k == 0:
        return SeriesClass.INVERTIBLE
    if k == 1:
        return SeriesClass.DELTA
    return SeriesClass.OTHER


def series_inverse(s):
    """Multiplicative inverse of an invertible series, same precision."""
    field = s.field
    a = s.coeffs
    if field.is_zero(a[0]):
        raise NotInvertible('not invertible')
    inv0 = field.one / a[0]
    b = [inv0]
    for n in range(1, s.precision):
        acc = field.sum_products((comb(n, k), a[k], b[n - k]) for k in range(1, n + 1))
        b.append(-(acc * inv0))
    return Series._raw(field, b)


def _shift_down(s, m):
    """Divide by t^m a series whose first m coefficients vanish."""
    field = s.field
    out = []
    for k in range(s.precision - m):
        # ordinary c_{k+m} -> exponential index k: a'_k = k! a_{k+m} / (k+m)!
        out.append(field.scale(s.coeffs[k + m], Fraction(factorial(k), factorial(k + m))))
    return Series._raw(field, out)


def series_div(a, b):
    """
    Quotient a / b as a power series.

    Requires order(b) <= order(a). Both leading orders are cancelled exactly
    before inverting, so the result has precision min(N_a, N_b) - order(b).
    """
    field = _check_same_field(a, b)
    try:
        m = order(b)
    except OrderUndefined:
        raise DivisionByZero('division by zero series')
    try:
        if order(a) < m:
            raise QuotientNotSeries('quotient not a power series')
    except OrderUndefined:
        pass
    n = min(a.precision, b.precision)
    if n - m < 1:
        raise PrecisionError(f"insufficient precision to divide by a series of order {m}")
    num = _shift_down(a.truncate(n), m)
    den = _shift_down(b.truncate(n), m)
    return series_mul(num, series_inverse(den))


def series_pow_int(s, k):
    """Integer power by repeated squaring; s^0 = 1, negative k needs order 0."""
    if k < 0:
        if s.field.is_zero(s.coeffs[0]):
            raise NotInvertible('negative power of non-invertible series')
        return series_pow_int(series_inverse(s), -k)
    result = Series.one(s.field, s.precision)
    base = s
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def series_compose(outer, inner):
    """
    outer(inner(t)) by Horner evaluation.

    inner must have zero constant term. Result precision is
    min(precision(outer), precision(inner)).
    """
    field = _check_same_field(outer, inner)
    if not field.is_zero(inner.coeffs[0]):
        raise SeriesDomainError('composition requires delta inner series')
    n = min(outer.precision, inner.precision)
    inner = inner.truncate(n)
    acc = Series.constant(field, outer.ordinary(n - 1), n)
    for k in range(n - 2, -1, -1):
        acc = series_mul(acc, inner)
        acc = Series._raw(field, (acc.coeffs[0] + outer.ordinary(k),) + acc.coeffs[1:])
    return acc


def series_comp_inverse(f):
    """
    Compositional inverse of a delta series.

    Lagrange inversion: with h = t / f, the exponential coefficient n of the
    inverse equals the exponential coefficient n-1 of h^n.
    """
    field = f.field
    try:
        if order(f) != 1:
            raise NotDelta('not a delta series')
    except OrderUndefined:
        raise NotDelta('not a delta series')
    n_max = f.precision
    h = series_inverse(_shift_down(f, 1))
    out = [field.zero]
    power = Series.one(field, h.precision)
    for n in range(1, n_max):
        power = series_mul(power, h)
        out.append(power.coeffs[n - 1])
    logger.debug(f"compositional inverse computed to precision {n_max}")
    return Series._raw(field, out)


def derivative(s):
    """d/dt; in the exponential convention a'_k = a_{k+1}."""
    if s.precision < 2:
        raise PrecisionError('derivative needs precision >= 2')
    return Series._raw(s.field, s.coeffs[1:])


def integral(s):
    """Antiderivative with zero constant term."""
    return Series._raw(s.field, (s.field.zero,) + s.coeffs)


def series_exp(s):
    """exp(s) for a series with zero constant term; E' = s' E."""
    field = s.field
    if not field.is_zero(s.coeffs[0]):
        raise SeriesDomainError('exp requires a series with zero constant term')
    d = s.coeffs[1:]
    e = [field.one]
    for n in range(s.precision - 1):
        e.append(field.sum_products((comb(n, k), d[k], e[n - k]) for k in range(n + 1)))
    return Series._raw(field, e)


def series_log(s):
    """log(s) for a series with constant term 1; L' = s' / s."""
    field = s.field
    if s.coeffs[0] != field.one:
        raise SeriesDomainError('log requires constant term 1')
    if s.precision == 1:
        return Series.constant(field, 0, 1)
    return integral(series_mul(derivative(s), series_inverse(s.truncate(s.precision - 1))))


def series_sqrt(s):
    """Square root with constant term 1 for a series with constant term 1."""
    field = s.field
    if s.coeffs[0] != field.one:
        raise SeriesDomainError('sqrt requires constant term 1')
    a = s.coeffs
    r = [field.one]
    for n in range(1, s.precision):
        cross = field.sum_products((comb(n, k), r[k], r[n - k]) for k in range(1, n))
        r.append(field.scale(a[n] - cross, Fraction(1, 2)))
    return Series._raw(field, r)

