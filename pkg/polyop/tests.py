import random
from fractions import Fraction
from math import factorial

from django.test import SimpleTestCase

from coefficients.exceptions import PrecisionError, TransferDomainError
from coefficients.fields import LAMBDA, RATIONALS
from coefficients.ratfunc import LambdaRatFunc
from series.formal import Series
from series.library import bernoulli_kernel, exp_series

from .operators import apply_series
from .polynomial import Poly, div_by_x, mul_by_x, poly_derivative, poly_eval, poly_shift
from .stirling import count_set_partitions, falling_factorial, stirling1, stirling2

Q = RATIONALS


def x_power(n, field=Q):
    return Poly.monomial(field, n)


def random_poly(rng, degree, field=Q):
    return Poly(field, [rng.randint(-4, 4) for _ in range(degree + 1)])


class PolyBasicsTests(SimpleTestCase):

    def test_derivative(self):
        self.assertEqual(poly_derivative(x_power(3), 1), Poly(Q, [0, 0, 3]))
        self.assertEqual(poly_derivative(x_power(3), 4), Poly.zero(Q))

    def test_shift(self):
        self.assertEqual(poly_shift(x_power(2), 1), Poly(Q, [1, 2, 1]))

    def test_eval(self):
        p = Poly(Q, [Fraction(1, 6), -1, 1])
        self.assertEqual(poly_eval(p, 0), Fraction(1, 6))
        self.assertEqual(p(1), Fraction(1, 6))

    def test_trailing_zeros_stripped(self):
        p = Poly(Q, [1, 2, 0, 0])
        self.assertEqual(p.degree, 1)
        self.assertEqual(Poly(Q, [0, 0]).degree, -1)

    def test_shift_over_lambda(self):
        lam = LambdaRatFunc.generator()
        p = Poly(LAMBDA, [0, 1])
        self.assertEqual(poly_shift(p, lam), Poly(LAMBDA, [lam, 1]))

    def test_specialize(self):
        lam = LambdaRatFunc.generator()
        p = Poly(LAMBDA, [2 / (1 - lam), 2])
        self.assertEqual(p.specialize(-1), Poly(Q, [1, 2]))


class MulDivByXTests(SimpleTestCase):

    def test_div_by_x(self):
        self.assertEqual(div_by_x(Poly(Q, [0, 2, 0, 1])), Poly(Q, [2, 0, 1]))

    def test_round_trip(self):
        p = Poly(Q, [0, 5, -1, 3])
        self.assertEqual(mul_by_x(div_by_x(p)), p)

    def test_guard(self):
        with self.assertRaisesMessage(TransferDomainError, 'transfer formula requires pₙ(0) = 0'):
            div_by_x(Poly(Q, [1, 1]))


class ApplySeriesTests(SimpleTestCase):

    def test_powers_of_t(self):
        for n in range(6):
            for k in range(8):
                result = apply_series(Series.monomial(Q, k, 8), x_power(n))
                if k <= n:
                    expected = Poly.monomial(Q, n - k, factorial(n) // factorial(n - k))
                else:
                    expected = Poly.zero(Q)
                self.assertEqual(result, expected)

    def test_exponential_shifts(self):
        self.assertEqual(apply_series(exp_series(Q, 3), x_power(2)), Poly(Q, [1, 2, 1]))
        rng = random.Random(12)
        p = random_poly(rng, 6)
        self.assertEqual(apply_series(exp_series(Q, 7, y=Fraction(-1, 2)), p), poly_shift(p, Fraction(-1, 2)))

    def test_bernoulli_operator(self):
        result = apply_series(bernoulli_kernel(Q, 3), x_power(2))
        self.assertEqual(result, Poly(Q, [Fraction(1, 6), -1, 1]))

    def test_insufficient_precision(self):
        with self.assertRaises(PrecisionError):
            apply_series(exp_series(Q, 2), x_power(2))

    def test_operator_homomorphism(self):
        rng = random.Random(21)
        for _ in range(10):
            f = Series(Q, [rng.randint(-3, 3) for _ in range(9)])
            g = Series(Q, [rng.randint(-3, 3) for _ in range(9)])
            p = random_poly(rng, rng.randint(0, 8))
            self.assertEqual(apply_series(f * g, p), apply_series(f, apply_series(g, p)))

    def test_linearity(self):
        rng = random.Random(22)
        for _ in range(10):
            f = Series(Q, [rng.randint(-3, 3) for _ in range(7)])
            p, q = random_poly(rng, 6), random_poly(rng, 4)
            self.assertEqual(apply_series(f, p + q), apply_series(f, p) + apply_series(f, q))


class StirlingTests(SimpleTestCase):

    def test_falling_factorial(self):
        self.assertEqual(falling_factorial(3), Poly(Q, [0, 2, -3, 1]))
        self.assertEqual(falling_factorial(0), Poly(Q, [1]))

    def test_diagonal(self):
        for n in range(9):
            self.assertEqual(stirling1(n, n), 1)
            self.assertEqual(stirling2(n, n), 1)

    def test_stirling2_known_value(self):
        self.assertEqual(stirling2(4, 2), 7)
        self.assertEqual(count_set_partitions(4, 2), 7)

    def test_stirling2_matches_enumeration(self):
        for l in range(9):
            for n in range(l + 1):
                self.assertEqual(stirling2(l, n), count_set_partitions(l, n))

    def test_stirling1_signs(self):
        self.assertEqual(stirling1(4, 1), -6)
        self.assertEqual(stirling1(4, 2), 11)
        self.assertEqual(stirling1(2, 5), 0)

    def test_inverse_triangular_arrays(self):
        for n in range(11):
            for m in range(11):
                total = sum(stirling2(n, k) * stirling1(k, m) for k in range(11))
                self.assertEqual(total, 1 if n == m else 0)
