"""Pincherle derivative: g'(t) = g(t) x - x g(t) as operators on polynomials."""
from coefficients.fields import lift
from polyop.operators import apply_series
from polyop.polynomial import mul_by_x
from series.formal import derivative


def pincherle(g):
    """The t-derivative of g (a'_k = a_{k+1})."""
    return derivative(g)


def pincherle_commutator(g, p):
    """g(t) (x p) - x (g(t) p)."""
    g, p = lift(g, p)
    return apply_series(g, mul_by_x(p)) - mul_by_x(apply_series(g, p))


def verify_pincherle(g, p):
    g, p = lift(g, p)
    return apply_series(pincherle(g), p) == pincherle_commutator(g, p)
