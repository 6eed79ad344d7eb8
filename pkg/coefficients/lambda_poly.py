"""
Polynomials in the formal parameter lambda with rational coefficients.

A LambdaPoly is the numerator/denominator material of the field Q(lambda).
Coefficients are stored lowest power first with no trailing zeros, so the
zero polynomial is the empty tuple and structural equality is field equality.

The gcd runs a primitive polynomial remainder sequence over the integers:
both inputs are cleared of denominators, and every pseudo-remainder is reduced
to its primitive part before the next step.
"""
from fractions import Fraction
from functools import reduce
from math import gcd as int_gcd, lcm as int_lcm

from .exceptions import DivisionByZero


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class LambdaPoly:
    """Immutable polynomial in lambda over the rationals."""

    __slots__ = ('coeffs', '_hash')

    def __init__(self, coeffs=()):
        object.__setattr__(self, 'coeffs', _strip(Fraction(c) for c in coeffs))
        object.__setattr__(self, '_hash', None)

    def __setattr__(self, name, value):
        raise AttributeError('LambdaPoly is immutable')

    @classmethod
    def _raw(cls, coeffs):
        # Trusted constructor: coeffs are already Fractions.
        obj = object.__new__(cls)
        object.__setattr__(obj, 'coeffs', _strip(coeffs))
        object.__setattr__(obj, '_hash', None)
        return obj

    @classmethod
    def constant(cls, c):
        return cls._raw((Fraction(c),))

    @classmethod
    def generator(cls):
        """The polynomial lambda itself."""
        return cls._raw((Fraction(0), Fraction(1)))

    # Structure

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0] == 1

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __eq__(self, other):
        if isinstance(other, LambdaPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, '_hash', hash(self.coeffs))
        return self._hash

    def __repr__(self):
        return f"LambdaPoly({[str(c) for c in self.coeffs]})"

    # Arithmetic

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LambdaPoly._raw(out)

    def __neg__(self):
        return LambdaPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LambdaPoly._raw(())
        if len(a) == 1:
            return self_scale(other, a[0])
        if len(b) == 1:
            return self_scale(self, b[0])
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LambdaPoly._raw(out)

    def scale(self, c):
        return self_scale(self, Fraction(c))

    def monic(self):
        if not self.coeffs:
            return self
        return self_scale(self, 1 / self.coeffs[-1])

    def divmod(self, other):
        """Euclidean division over Q: returns (quotient, remainder)."""
        if other.is_zero():
            raise DivisionByZero('division by zero polynomial')
        rem = list(self.coeffs)
        dg = other.degree
        lead = other.coeffs[-1]
        if len(rem) - 1 < dg:
            return LambdaPoly._raw(()), self
        quot = [Fraction(0)] * (len(rem) - dg)
        for k in range(len(rem) - 1 - dg, -1, -1):
            c = rem[k + dg] / lead
            quot[k] = c
            if c:
                for j, g in enumerate(other.coeffs):
                    rem[k + j] -= c * g
        return LambdaPoly._raw(quot), LambdaPoly._raw(rem[:dg])

    def exact_div(self, other):
        if other.is_one():
            return self
        quot, rem = self.divmod(other)
        if not rem.is_zero():
            raise ArithmeticError(f"{self!r} is not divisible by {other!r}")
        return quot

    def __call__(self, value):
        """Horner evaluation at an exact rational."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc


def self_scale(poly, c):
    if c == 0:
        return LambdaPoly._raw(())
    if c == 1:
        return poly
    return LambdaPoly._raw(tuple(x * c for x in poly.coeffs))


# Integer primitive remainder sequence

def _primitive_ints(coeffs):
    """Clear denominators and divide out the content; leading coefficient > 0."""
    den = reduce(int_lcm, (c.denominator for c in coeffs), 1)
    ints = [int(c * den) for c in coeffs]
    content = reduce(int_gcd, ints, 0)
    if ints[-1] < 0:
        content = -content
    return [i // content for i in ints]


def _primitive_part(ints):
    content = reduce(int_gcd, ints, 0)
    if ints[-1] < 0:
        content = -content
    return [i // content for i in ints]


def _pseudo_remainder(f, g):
    """Pseudo-remainder of integer polynomials (lowest power first)."""
    r = list(f)
    dg = len(g) - 1
    lead = g[-1]
    while len(r) - 1 >= dg and r:
        c = r[-1]
        shift = len(r) - 1 - dg
        r = [lead * x for x in r]
        for j, y in enumerate(g):
            r[shift + j] -= c * y
        while r and r[-1] == 0:
            r.pop()
    return r


def poly_gcd(a, b):
    """Monic gcd of two LambdaPolys (gcd(0, 0) is 0)."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_constant() or b.is_constant():
        return LambdaPoly._raw((Fraction(1),))
    f, g = _primitive_ints(a.coeffs), _primitive_ints(b.coeffs)
    if len(f) < len(g):
        f, g = g, f
    while g:
        if len(g) == 1:
            return LambdaPoly._raw((Fraction(1),))
        r = _pseudo_remainder(f, g)
        f, g = g, (_primitive_part(r) if r else r)
    lead = f[-1]
    return LambdaPoly._raw(tuple(Fraction(c, lead) for c in f))
