"""
Scalar fields and field descriptors.

A Scalar is either an exact rational (fractions.Fraction) or an element of
Q(lambda) (LambdaRatFunc). Every Series and Poly carries the Field it lives in,
and all of its coefficients belong to that field.

Usage:
    from coefficients.fields import RATIONALS, LAMBDA, scalar_arith

    half = RATIONALS.coerce(Fraction(1, 2))
    lam = LAMBDA.generator()
    scalar_arith(lam, LAMBDA.one, 'sub')
"""
import logging
from collections import defaultdict
from fractions import Fraction

from .exceptions import DivisionByZero, VariantMismatch
from .lambda_poly import LambdaPoly, poly_gcd
from .ratfunc import LambdaRatFunc, eval_at_lambda, ratfunc_normalize

logger = logging.getLogger(__name__)


class Field:
    """Base descriptor: fixes which scalar variant a computation runs in."""

    name = ''
    scalar_type = None

    def __repr__(self):
        return f"<Field {self.name}>"

    def contains(self, value):
        return isinstance(value, self.scalar_type)

    def check(self, value):
        if not self.contains(value):
            raise VariantMismatch(
                f"variant mismatch: expected {self.name} scalar, got {type(value).__name__}"
            )
        return value


class RationalField(Field):
    """Exact rationals."""

    name = 'rational'
    scalar_type = Fraction

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, LambdaRatFunc):
            raise VariantMismatch('variant mismatch: lambda scalar in the rational field')
        return Fraction(value)

    def from_rational(self, value):
        return Fraction(value)

    def scale(self, value, c):
        return value * c

    def is_zero(self, value):
        return value == 0

    def sum_products(self, terms):
        """Sum of c * a * b over (int c, a, b) triples."""
        total = Fraction(0)
        for c, a, b in terms:
            if a and b:
                total += c * a * b
        return total

    def specialize(self, value, v):
        return value


class LambdaField(Field):
    """Rational functions in the formal parameter lambda."""

    name = 'lambda'
    scalar_type = LambdaRatFunc

    def __init__(self):
        self.zero = LambdaRatFunc.constant(0)
        self.one = LambdaRatFunc.constant(1)

    def generator(self):
        return LambdaRatFunc.generator()

    def coerce(self, value):
        if isinstance(value, LambdaRatFunc):
            return value
        return LambdaRatFunc.constant(Fraction(value))

    def from_rational(self, value):
        return LambdaRatFunc.constant(Fraction(value))

    def scale(self, value, c):
        return value.scale(c)

    def is_zero(self, value):
        return value.is_zero()

    def sum_products(self, terms):
        """
        Sum of c * a * b over (int c, a, b) triples with one normalization.

        Products are accumulated unreduced and grouped by denominator, so the
        gcd work happens once per distinct denominator instead of per term.
        """
        groups = defaultdict(lambda: LambdaPoly._raw(()))
        for c, a, b in terms:
            if a.num.is_zero() or b.num.is_zero():
                continue
            den = a.den * b.den
            groups[den] = groups[den] + (a.num * b.num).scale(c)
        if not groups:
            return self.zero
        num, den = None, None
        for gden, gnum in groups.items():
            if gnum.is_zero():
                continue
            if num is None:
                num, den = gnum, gden
                continue
            if gden == den:
                num = num + gnum
                continue
            g = poly_gcd(den, gden)
            left = gden.exact_div(g)
            right = den.exact_div(g)
            num = num * left + gnum * right
            den = den * left
        if num is None:
            return self.zero
        return ratfunc_normalize(num, den)

    def specialize(self, value, v):
        return eval_at_lambda(value, v)


RATIONALS = RationalField()
LAMBDA = LambdaField()


def field_of(value):
    """The field a single scalar belongs to."""
    if isinstance(value, LambdaRatFunc):
        return LAMBDA
    if isinstance(value, Fraction):
        return RATIONALS
    raise VariantMismatch(f"not a scalar: {type(value).__name__}")


def common_field(*fields):
    first = fields[0]
    for other in fields[1:]:
        if other is not first:
            raise VariantMismatch(f"variant mismatch: {first.name} vs {other.name}")
    return first


def scalar_arith(a, b, op):
    """
    Exact field arithmetic on two scalars of the same variant.

    Args:
        a, b: Fraction or LambdaRatFunc, same variant
        op: one of 'add', 'sub', 'mul', 'div'

    Returns:
        The normalized result, same variant as the inputs.
    """
    common_field(field_of(a), field_of(b))
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'div':
        if b == 0:
            raise DivisionByZero('division by zero')
        return a / b
    raise ValueError(f"unknown operation: {op}")


def scalar_to_json(value):
    """JSON document for a scalar (big integers as decimal strings)."""
    if isinstance(value, LambdaRatFunc):
        return {
            'num': [scalar_to_json(c) for c in value.num.coeffs],
            'den': [scalar_to_json(c) for c in value.den.coeffs],
        }
    value = Fraction(value)
    return {'num': str(value.numerator), 'den': str(value.denominator)}


def scalar_from_json(doc):
    """Inverse of scalar_to_json."""
    if isinstance(doc['num'], list):
        num = LambdaPoly([scalar_from_json(c) for c in doc['num']])
        den = LambdaPoly([scalar_from_json(c) for c in doc['den']])
        return ratfunc_normalize(num, den)
    return Fraction(int(doc['num']), int(doc['den']))


def lift(*items):
    """Bring series or polynomials to one field: Q(lambda) if any of them lives there."""
    if any(item.field is LAMBDA for item in items):
        return tuple(item.convert(LAMBDA) for item in items)
    return items
