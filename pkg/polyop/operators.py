"""
Series acting on polynomials as linear operators.

t acts as d/dx, so f(t) p(x) = sum_k a_k / k! p^(k)(x). In coefficients:

    (f p)_j = sum_k C(j + k, k) a_k p_{j+k}
"""
from math import comb

from coefficients.exceptions import PrecisionError
from coefficients.fields import common_field

from .polynomial import Poly


def apply_series(f, p):
    """
    Apply the operator f(t) to the polynomial p(x).

    Args:
        f: Series with precision > degree(p)
        p: Poly over the same field

    Returns:
        Poly: f(t) p(x), degree at most degree(p)
    """
    field = common_field(f.field, p.field)
    n = len(p.coeffs)
    if f.precision < n:
        raise PrecisionError(
            f"insufficient precision: need {n}, series has {f.precision}"
        )
    a = f.coeffs
    out = []
    for j in range(n):
        out.append(field.sum_products(
            (comb(j + k, k), a[k], p.coeffs[j + k]) for k in range(n - j)
        ))
    return Poly._raw(field, out)
