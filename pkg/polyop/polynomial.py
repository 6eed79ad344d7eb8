"""
Polynomials in x over an exact scalar field.

Coefficients are stored lowest power first with trailing zeros stripped; the
zero polynomial has no coefficients and degree -1.
"""
from math import comb

from coefficients.exceptions import TransferDomainError
from coefficients.fields import RATIONALS, common_field


def _strip(field, coeffs):
    coeffs = list(coeffs)
    while coeffs and field.is_zero(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Immutable polynomial sum c_j x^j."""

    __slots__ = ('field', 'coeffs')

    def __init__(self, field, coeffs=()):
        object.__setattr__(self, 'field', field)
        object.__setattr__(self, 'coeffs', _strip(field, (field.coerce(c) for c in coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError('Poly is immutable')

    @classmethod
    def _raw(cls, field, coeffs):
        obj = object.__new__(cls)
        object.__setattr__(obj, 'field', field)
        object.__setattr__(obj, 'coeffs', _strip(field, coeffs))
        return obj

    @classmethod
    def zero(cls, field=RATIONALS):
        return cls._raw(field, ())

    @classmethod
    def constant(cls, field, value):
        return cls._raw(field, (field.coerce(value),))

    @classmethod
    def monomial(cls, field, n, c=1):
        """c x^n."""
        return cls._raw(field, (field.zero,) * n + (field.coerce(c),))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, j):
        """Coefficient of x^j (zero beyond the degree)."""
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return self.field.zero

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.name, self.coeffs))

    def __repr__(self):
        return f"Poly({self.field.name}, {list(self.coeffs)!r})"

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.field, other)
        field = common_field(self.field, other.field)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly._raw(field, (self.coeff(j) + other.coeff(j) for j in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.field, (-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.field, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        field = common_field(self.field, other.field)
        if self.is_zero() or other.is_zero():
            return Poly.zero(field)
        out = []
        for m in range(len(self.coeffs) + len(other.coeffs) - 1):
            lo = max(0, m - len(other.coeffs) + 1)
            hi = min(m, len(self.coeffs) - 1)
            out.append(field.sum_products(
                (1, self.coeffs[j], other.coeffs[m - j]) for j in range(lo, hi + 1)
            ))
        return Poly._raw(field, out)

    __rmul__ = __mul__

    def scale(self, c):
        """Multiply by a scalar of the same field (ints and Fractions embed)."""
        if not isinstance(c, int):
            c = self.field.coerce(c)
        return Poly._raw(self.field, (x * c for x in self.coeffs))

    def __call__(self, value):
        return poly_eval(self, value)

    def convert(self, field):
        """Embed a rational polynomial into another field."""
        if field is self.field:
            return self
        return Poly(field, self.coeffs)

    def specialize(self, v):
        """Evaluate every coefficient at lambda = v (identity on rationals)."""
        return Poly(RATIONALS, (self.field.specialize(c, v) for c in self.coeffs))


def poly_eval(p, v):
    """p(v) by Horner's rule."""
    v = p.field.coerce(v)
    acc = p.field.zero
    for c in reversed(p.coeffs):
        acc = acc * v + c
    return acc


def poly_derivative(p, k=1):
    """k-th derivative d^k/dx^k."""
    if k < 0:
        raise ValueError('derivative order must be >= 0')
    field = p.field
    out = []
    for j in range(k, len(p.coeffs)):
        falling = 1
        for i in range(k):
            falling *= j - i
        out.append(p.coeffs[j] * falling)
    return Poly._raw(field, out)


def poly_shift(p, y):
    """p(x + y) by binomial expansion."""
    field = p.field
    y = field.coerce(y)
    powers = [field.one]
    for _ in range(len(p.coeffs)):
        powers.append(powers[-1] * y)
    out = []
    for i in range(len(p.coeffs)):
        out.append(field.sum_products(
            (comb(j, i), p.coeffs[j], powers[j - i]) for j in range(i, len(p.coeffs))
        ))
    return Poly._raw(field, out)


def mul_by_x(p):
    if p.is_zero():
        return p
    return Poly._raw(p.field, (p.field.zero,) + p.coeffs)


def div_by_x(p):
    """Exact division by x; the constant term must vanish."""
    if p.is_zero():
        return p
    if not p.field.is_zero(p.coeffs[0]):
        raise TransferDomainError('transfer formula requires pₙ(0) = 0')
    return Poly._raw(p.field, p.coeffs[1:])
