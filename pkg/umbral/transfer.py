"""
Transfer formula between associated sequences.

If p_n is associated to f and q_n to g (both delta), then

    q_n(x) = x (f(t) / g(t))^n x^{-1} p_n(x),   n >= 1,

and q_0 = 1.
"""
import logging

from coefficients.exceptions import NotDelta, OrderUndefined, PrecisionError
from coefficients.fields import lift
from polyop.operators import apply_series
from polyop.polynomial import Poly, div_by_x, mul_by_x
from series.formal import order, series_div, series_pow_int

logger = logging.getLogger(__name__)


def _require_delta(s):
    try:
        if order(s) == 1:
            return
    except OrderUndefined:
        pass
    raise NotDelta('not a delta series')


def transfer_operator(f, g, n):
    """(f / g)^n, the invertible series the transfer formula applies."""
    _require_delta(f)
    _require_delta(g)
    f, g = lift(f, g)
    return series_pow_int(series_div(f, g), n)


def transfer(p_seq, f, g, n):
    """
    q_n for the delta series g from the associated sequence p of f.

    Args:
        p_seq: sequence associated to f; anything indexed by degree that
            holds p_n will do (a PolySequence, or a dict {n: p_n})
        f, g: delta series, precision at least n + 1
        n: degree

    Returns:
        Poly: q_n
    """
    _require_delta(f)
    _require_delta(g)
    f, g = lift(f, g)
    field = f.field
    if n == 0:
        return Poly.constant(field, 1)
    if min(f.precision, g.precision) < n + 1:
        raise PrecisionError(f"insufficient precision: need {n + 1} for transfer at n = {n}")
    p_n = p_seq[n].convert(field)
    ratio = transfer_operator(f.truncate(n + 1), g.truncate(n + 1), n)
    q_n = mul_by_x(apply_series(ratio, div_by_x(p_n)))
    logger.debug(f"transfer formula applied at n = {n}")
    return q_n
