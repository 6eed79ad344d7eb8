"""
The field Q(lambda) of rational functions in the formal parameter lambda.

Canonical form: numerator and denominator coprime, denominator monic, zero is
0/1. Two field elements are equal exactly when their canonical forms are equal,
so equality and hashing are structural.

Python ints mix freely with LambdaRatFunc (binomial coefficients, signs).
Fractions do not: a Fraction is the other scalar variant, and mixing the two
raises VariantMismatch. Use LambdaRatFunc.constant() or scale() to embed Q.
"""
from fractions import Fraction

from .exceptions import DivisionByZero, ExcludedLambda, PoleError, VariantMismatch
from .lambda_poly import LambdaPoly, poly_gcd, self_scale

_ONE = LambdaPoly.constant(1)


def _coerce(value):
    if isinstance(value, LambdaRatFunc):
        return value
    if isinstance(value, bool):
        raise VariantMismatch(f"cannot mix {type(value).__name__} with a lambda scalar")
    if isinstance(value, int):
        return LambdaRatFunc.constant(value)
    raise VariantMismatch(f"cannot mix {type(value).__name__} with a lambda scalar")


def ratfunc_normalize(num, den):
    """Canonical LambdaRatFunc for num/den (den must be nonzero)."""
    if den.is_zero():
        raise DivisionByZero('division by zero polynomial')
    if num.is_zero():
        return LambdaRatFunc._raw(LambdaPoly._raw(()), _ONE)
    if not den.is_constant():
        g = poly_gcd(num, den)
        if not g.is_one():
            num = num.exact_div(g)
            den = den.exact_div(g)
    lead = den.leading
    if lead != 1:
        num = self_scale(num, 1 / lead)
        den = self_scale(den, 1 / lead)
    return LambdaRatFunc._raw(num, den)


class LambdaRatFunc:
    """Immutable element of Q(lambda) in canonical form."""

    __slots__ = ('num', 'den', '_hash')

    def __init__(self, num, den=None):
        if not isinstance(num, LambdaPoly):
            num = LambdaPoly(num)
        if den is None:
            den = _ONE
        elif not isinstance(den, LambdaPoly):
            den = LambdaPoly(den)
        canonical = ratfunc_normalize(num, den)
        object.__setattr__(self, 'num', canonical.num)
        object.__setattr__(self, 'den', canonical.den)
        object.__setattr__(self, '_hash', None)

    def __setattr__(self, name, value):
        raise AttributeError('LambdaRatFunc is immutable')

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        object.__setattr__(obj, 'num', num)
        object.__setattr__(obj, 'den', den)
        object.__setattr__(obj, '_hash', None)
        return obj

    @classmethod
    def constant(cls, value):
        return cls._raw(LambdaPoly.constant(value), _ONE)

    @classmethod
    def generator(cls):
        return cls._raw(LambdaPoly.generator(), _ONE)

    # Predicates

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, LambdaRatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, int) and not isinstance(other, bool):
            return self.den.is_one() and self.num == LambdaPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, '_hash', hash((self.num, self.den)))
        return self._hash

    def __repr__(self):
        return f"LambdaRatFunc({self.num!r}, {self.den!r})"

    # Arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            if self.den.is_one():
                return LambdaRatFunc._raw(self.num + other.num, _ONE)
            return ratfunc_normalize(self.num + other.num, self.den)
        if self.den.is_one():
            return LambdaRatFunc._raw(self.num * other.den + other.num, other.den)
        if other.den.is_one():
            return LambdaRatFunc._raw(self.num + other.num * self.den, self.den)
        g = poly_gcd(self.den, other.den)
        left = other.den.exact_div(g)
        right = self.den.exact_div(g)
        return ratfunc_normalize(self.num * left + other.num * right, self.den * left)

    __radd__ = __add__

    def __neg__(self):
        return LambdaRatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        other = _coerce(other)
        if self.num.is_zero() or other.num.is_zero():
            return LambdaRatFunc._raw(LambdaPoly._raw(()), _ONE)
        if self.den.is_one() and other.den.is_one():
            return LambdaRatFunc._raw(self.num * other.num, _ONE)
        a, b, c, d = self.num, self.den, other.num, other.den
        if not d.is_one():
            g = poly_gcd(a, d)
            if not g.is_one():
                a, d = a.exact_div(g), d.exact_div(g)
        if not b.is_one():
            g = poly_gcd(c, b)
            if not g.is_one():
                c, b = c.exact_div(g), b.exact_div(g)
        num, den = a * c, b * d
        lead = den.leading
        if lead != 1:
            num, den = self_scale(num, 1 / lead), self_scale(den, 1 / lead)
        return LambdaRatFunc._raw(num, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise DivisionByZero('division by zero')
        lead = self.num.leading
        return LambdaRatFunc._raw(self_scale(self.den, 1 / lead), self_scale(self.num, 1 / lead))

    def __truediv__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            if other == 0:
                raise DivisionByZero('division by zero')
            return self.scale(Fraction(1, other))
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = LambdaRatFunc.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c):
        """Multiply by an exact rational constant (stays canonical)."""
        c = Fraction(c)
        if c == 0:
            return LambdaRatFunc._raw(LambdaPoly._raw(()), _ONE)
        return LambdaRatFunc._raw(self_scale(self.num, c), self.den)


def eval_at_lambda(value, v):
    """
    Specialize an element of Q(lambda) at lambda = v.

    Args:
        value: LambdaRatFunc to evaluate
        v: exact rational, must differ from 1

    Returns:
        Fraction: the exact value
    """
    v = Fraction(v)
    if v == 1:
        raise ExcludedLambda('lambda must differ from 1')
    den = value.den(v)
    if den == 0:
        raise PoleError(f"pole at lambda = {v}")
    return value.num(v) / den
