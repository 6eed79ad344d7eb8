"""
Explicit formulas for the families, built exactly as printed.

Nothing here is corrected: a formula with a misprint produces the misprinted
polynomial, and the identities app decides which variant holds.
"""
from math import comb, factorial

from coefficients.exceptions import FamilyParameterError
from coefficients.fields import LAMBDA, RATIONALS
from polyop.polynomial import Poly, poly_shift
from polyop.stirling import falling_factorial
from series.library import one_minus_lambda

from .catalog import FamilyId, FamilyKind, bernoulli, family_numbers, frobenius_euler


def falling(v, m):
    """(v)_m = v (v - 1) ... (v - m + 1) for an integer v."""
    result = 1
    for i in range(m):
        result *= v - i
    return result


def x_poly(field=RATIONALS):
    return Poly.monomial(field, 1)


def shifted_power(field, y, m):
    """(x + y)^m."""
    return poly_shift(Poly.monomial(field, m), y)


def _require_n(n, lowest, label):
    if n < lowest:
        raise FamilyParameterError(f"{label} closed form needs n >= {lowest}, got n = {n}")


def mittag_leffler_closed(n):
    """sum_k C(n, k) (n-1)_{n-k} 2^k (x)_k."""
    _require_n(n, 0, 'Mittag-Leffler')
    total = Poly.zero(RATIONALS)
    for k in range(n + 1):
        total = total + falling_factorial(k) * (comb(n, k) * falling(n - 1, n - k) * 2 ** k)
    return total


def assoc_s_closed(n):
    """x / (1-lambda)^n sum_l C(n, l) (-lambda)^{n-l} (x + l)^{n-1}; the n = 0 term reads as 1."""
    _require_n(n, 0, 'Theorem 1')
    if n == 0:
        return Poly.constant(LAMBDA, 1)
    lam = LAMBDA.generator()
    total = Poly.zero(LAMBDA)
    for l in range(n + 1):
        total = total + shifted_power(LAMBDA, l, n - 1) * (comb(n, l) * (-lam) ** (n - l))
    return (x_poly(LAMBDA) * total) * one_minus_lambda() ** (-n)


def appell_closed(fid, n):
    """sum_k C(n, k) c_{n-k} x^k with c the family numbers (Bernoulli or Frobenius-Euler)."""
    _require_n(n, 0, str(fid))
    numbers = family_numbers(fid, n)
    field = fid.field
    total = Poly.zero(field)
    for k in range(n + 1):
        total = total + Poly.monomial(field, k, numbers[n - k] * comb(n, k))
    return total


def daehee_closed(n):
    """1/(1-lambda) sum_k C(n, k) (n-1)_{n-k} 2^k ((x+1)_k - lambda (x)_k)."""
    _require_n(n, 0, 'Daehee')
    lam = LAMBDA.generator()
    total = Poly.zero(LAMBDA)
    for k in range(n + 1):
        weight = comb(n, k) * falling(n - 1, n - k) * 2 ** k
        if weight == 0:
            continue
        lower = falling_factorial(k).convert(LAMBDA)
        bracket = poly_shift(lower, 1) - lower * lam
        total = total + bracket * weight
    return total * one_minus_lambda().inverse()


def changhee_closed(a, n, reciprocal=False):
    """
    sum_l C(n-1, l) B_l^{(n)} (x H_{n-1-l}^{(a)}(x) - a/(1-lambda) H_{n-1-l}^{(a+1)}(x+1)), n >= 1.

    With reciprocal=True the operator ((e^t-lambda)/(1-lambda))^a replaces its
    inverse, giving x H^{(-a)}(x) + a/(1-lambda) H^{(1-a)}(x+1) in the bracket.
    """
    _require_n(n, 1, 'Changhee')
    b_numbers = family_numbers(FamilyId(FamilyKind.BERNOULLI, n), n - 1)
    if reciprocal:
        order, shifted_order, sign = -a, 1 - a, 1
    else:
        order, shifted_order, sign = a, a + 1, -1
    coefficient = one_minus_lambda().inverse() * (sign * a)
    x = x_poly(LAMBDA)
    total = Poly.zero(LAMBDA)
    for l in range(n):
        m = n - 1 - l
        bracket = x * frobenius_euler(order, m) + poly_shift(frobenius_euler(shifted_order, m), 1) * coefficient
        total = total + bracket.scale(LAMBDA.coerce(b_numbers[l] * comb(n - 1, l)))
    return total


def mittag_leffler_lambda_closed(n):
    """sum_l C(n, l) (-lambda)^{n-l} x B_{n-1}^{(n)}(x + l), n >= 1."""
    _require_n(n, 1, 'Theorem 6')
    lam = LAMBDA.generator()
    b = bernoulli(n, n - 1).convert(LAMBDA)
    total = Poly.zero(LAMBDA)
    for l in range(n + 1):
        total = total + poly_shift(b, l) * (comb(n, l) * (-lam) ** (n - l))
    return x_poly(LAMBDA) * total


def daehee2_printed(n):
    """
    1/(1-lambda) sum_j C(n, j) ((x+1) B_{n-j}^{(n)}(x+1+j) - lambda x B_{n-1}^{(n)}(x+j)) (-lambda)^{n-j}.

    The first Bernoulli index is n - j exactly as printed.
    """
    return _daehee2_form(n, lambda j: n - j)


def daehee2_closed(n):
    """The same sum with B_{n-1}^{(n)} in both places."""
    return _daehee2_form(n, lambda j: n - 1)


def _daehee2_form(n, first_index):
    _require_n(n, 1, 'Daehee second kind')
    lam = LAMBDA.generator()
    x = x_poly(LAMBDA)
    x_plus_one = poly_shift(x, 1)
    b_tail = bernoulli(n, n - 1).convert(LAMBDA)
    total = Poly.zero(LAMBDA)
    for j in range(n + 1):
        b_head = bernoulli(n, first_index(j)).convert(LAMBDA)
        bracket = x_plus_one * poly_shift(b_head, 1 + j) - x * poly_shift(b_tail, j) * lam
        total = total + bracket * (comb(n, j) * (-lam) ** (n - j))
    return total * one_minus_lambda().inverse()


def tstar_closed(n):
    """(1/2)^n sum_{l <= (n-1)/2} C(n, l) (n-1)! / (n-2l-1)! x^{n-2l}, n >= 1."""
    _require_n(n, 1, 'T*')
    total = Poly.zero(RATIONALS)
    for l in range((n - 1) // 2 + 1):
        c = comb(n, l) * factorial(n - 1) // factorial(n - 2 * l - 1)
        total = total + Poly.monomial(RATIONALS, n - 2 * l, c)
    return total.scale(RATIONALS.coerce(2) ** (-n))


def remark_s44_form(n, order_sign):
    """
    (1/(1-lambda)) ((x+1) H_{n-1}^{(k)}(x+1) - lambda x H_{n-1}^{(k)}(x)) with k = order_sign * n.
    """
    _require_n(n, 1, 'Remark S')
    lam = LAMBDA.generator()
    x = x_poly(LAMBDA)
    h = frobenius_euler(order_sign * n, n - 1)
    bracket = poly_shift(x * h, 1) - x * h * lam
    return bracket * one_minus_lambda().inverse()


def remark_s44_printed(n):
    return remark_s44_form(n, 1)


_CLOSED_FORMS = {
    FamilyKind.MITTAG_LEFFLER: lambda fid, n: mittag_leffler_closed(n),
    FamilyKind.ASSOC_S: lambda fid, n: assoc_s_closed(n),
    FamilyKind.BERNOULLI: appell_closed,
    FamilyKind.FROBENIUS_EULER: appell_closed,
    FamilyKind.DAEHEE: lambda fid, n: daehee_closed(n),
    FamilyKind.CHANGHEE: lambda fid, n: changhee_closed(fid.order, n),
    FamilyKind.MITTAG_LEFFLER_LAMBDA: lambda fid, n: mittag_leffler_lambda_closed(n),
    FamilyKind.DAEHEE2: lambda fid, n: daehee2_printed(n),
    FamilyKind.ASSOC_T: lambda fid, n: tstar_closed(n),
    FamilyKind.REMARK_S44: lambda fid, n: remark_s44_printed(n),
}


def closed_form(fid, n):
    """
    The printed explicit formula for member n of a family.

    Raises FamilyParameterError when n is outside the formula's stated range.
    """
    return _CLOSED_FORMS[fid.kind](fid, n)
