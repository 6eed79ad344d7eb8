"""
Named generating series used by the special families.

Every builder takes the precision N wanted in the result and returns a Series
with exactly N coefficients; builders that divide by t work one coefficient
higher internally.
"""
from math import factorial

from django.conf import settings

from coefficients.fields import LAMBDA, RATIONALS
from coefficients.exceptions import UnknownFamily

from .formal import (
    Series,
    series_div,
    series_log,
    series_sqrt,
)


def exp_series(field, precision, y=1):
    """e^{y t}."""
    return Series.exponential(field, y, precision)


def exp_minus_one(field, precision):
    """e^t - 1."""
    return exp_series(field, precision) - 1


def t_series(field, precision):
    return Series.variable(field, precision)


def log1p(field, precision, sign=1):
    """log(1 + sign*t): a_k = sign^k (-1)^(k-1) (k-1)!."""
    coeffs = [field.zero]
    for k in range(1, precision):
        coeffs.append(field.coerce((-1) ** (k - 1) * sign ** k * factorial(k - 1)))
    return Series(field, coeffs)


def log_ratio(field, precision):
    """log((1 + t) / (1 - t))."""
    return log1p(field, precision) - log1p(field, precision, sign=-1)


def bernoulli_kernel(field, precision):
    """t / (e^t - 1)."""
    return series_div(t_series(field, precision + 1), exp_minus_one(field, precision + 1))


def bernoulli_kernel_inverse(field, precision):
    """(e^t - 1) / t."""
    return series_div(exp_minus_one(field, precision + 1), t_series(field, precision + 1))


def one_minus_lambda(field=LAMBDA):
    return field.one - field.generator()


def frobenius_euler_kernel(precision):
    """(1 - lambda) / (e^t - lambda) over Q(lambda)."""
    return series_div(
        Series.constant(LAMBDA, one_minus_lambda(), precision),
        exp_series(LAMBDA, precision) - LAMBDA.generator(),
    )


def frobenius_euler_kernel_inverse(precision):
    """(e^t - lambda) / (1 - lambda): a_0 = 1, a_k = 1/(1 - lambda)."""
    inv = one_minus_lambda().inverse()
    return Series(LAMBDA, [LAMBDA.one] + [inv] * (precision - 1))


def daehee_delta(field, precision):
    """(e^t - 1) / (e^t + 1)."""
    return series_div(exp_minus_one(field, precision), exp_series(field, precision) + 1)


def assoc_s_delta(precision):
    """(1 - lambda) t / (e^t - lambda)."""
    return t_series(LAMBDA, precision) * frobenius_euler_kernel(precision)


def mittag_leffler_lambda_delta(precision):
    """(e^t - 1) / (e^t - lambda)."""
    return series_div(exp_minus_one(LAMBDA, precision), exp_series(LAMBDA, precision) - LAMBDA.generator())


def tstar_delta(field, precision):
    """2t / (1 + t^2)."""
    return series_div(
        Series.from_ordinary(field, [0, 2], precision),
        Series.from_ordinary(field, [1, 0, 1], precision),
    )


def sqrt_one_minus_t2(field, precision):
    """sqrt(1 - t^2)."""
    return series_sqrt(Series.from_ordinary(field, [1, 0, -1], precision))


def tstar_inverse(field, precision):
    """(1 - sqrt(1 - t^2)) / t, the compositional inverse of 2t / (1 + t^2)."""
    top = Series.one(field, precision + 1) - sqrt_one_minus_t2(field, precision + 1)
    return series_div(top, t_series(field, precision + 1))


# Named series for the command line: name -> (field, builder(precision), description)
NAMED_SERIES = {
    'exp': (RATIONALS, lambda n: exp_series(RATIONALS, n), 'e^t'),
    'log1p': (RATIONALS, lambda n: log1p(RATIONALS, n), 'log(1+t)'),
    'bernoulli': (RATIONALS, lambda n: bernoulli_kernel(RATIONALS, n), 't/(e^t-1)'),
    'frobenius-euler': (LAMBDA, frobenius_euler_kernel, '(1-lambda)/(e^t-lambda)'),
    'daehee-f': (RATIONALS, lambda n: daehee_delta(RATIONALS, n), '(e^t-1)/(e^t+1)'),
    'daehee-g': (LAMBDA, frobenius_euler_kernel, '(1-lambda)/(e^t-lambda)'),
    'changhee-f': (RATIONALS, lambda n: exp_minus_one(RATIONALS, n), 'e^t-1'),
    'tstar-f': (RATIONALS, lambda n: tstar_delta(RATIONALS, n), '2t/(1+t^2)'),
    'tstar-fbar': (RATIONALS, lambda n: tstar_inverse(RATIONALS, n), '(1-sqrt(1-t^2))/t'),
    'sqrt-1-t2': (RATIONALS, lambda n: sqrt_one_minus_t2(RATIONALS, n), 'sqrt(1-t^2)'),
    'log-ratio': (RATIONALS, lambda n: log_ratio(RATIONALS, n), 'log((1+t)/(1-t))'),
}


def named_series(name, precision):
    """
    Expand a named generating series.

    Returns:
        tuple: (Series, description)
    """
    try:
        _, builder, description = NAMED_SERIES[name]
    except KeyError:
        raise UnknownFamily(f"unknown series name: {name}")
    return builder(precision), description


def working_precision(n):
    """
    Series precision used when a request needs polynomials up to degree n.

    Defaults to 2n + 4; UMBRA_PRECISION = p switches to n + 1 + p.
    """
    padding = getattr(settings, 'UMBRA_PRECISION', None)
    if padding is None:
        return 2 * n + 4
    return n + 1 + padding
