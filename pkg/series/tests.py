import random
from fractions import Fraction
from math import comb, factorial

from django.test import SimpleTestCase

from coefficients.exceptions import (
    NotDelta,
    NotInvertible,
    OrderUndefined,
    QuotientNotSeries,
    SeriesDomainError,
)
from coefficients.fields import LAMBDA, RATIONALS
from coefficients.ratfunc import LambdaRatFunc

from .formal import (
    Series,
    SeriesClass,
    classify,
    order,
    series_comp_inverse,
    series_compose,
    series_div,
    series_exp,
    series_inverse,
    series_log,
    series_mul,
    series_pow_int,
    series_sqrt,
)
from .library import (
    bernoulli_kernel,
    bernoulli_kernel_inverse,
    daehee_delta,
    exp_minus_one,
    exp_series,
    frobenius_euler_kernel,
    log1p,
    log_ratio,
    sqrt_one_minus_t2,
    t_series,
    tstar_delta,
    tstar_inverse,
)

Q = RATIONALS
LAM = LambdaRatFunc.generator()


def fr(*values):
    return [Fraction(v) for v in values]


def random_series(rng, precision, lowest=0):
    coeffs = [0] * lowest + [rng.randint(-3, 3) for _ in range(precision - lowest)]
    return Series(Q, coeffs)


def random_delta(rng, precision):
    coeffs = [0, rng.choice([-3, -2, -1, 1, 2, 3])]
    coeffs += [rng.randint(-3, 3) for _ in range(precision - 2)]
    return Series(Q, coeffs)


class SeriesArithmeticTests(SimpleTestCase):

    def test_product_is_exponential_convolution(self):
        n = 8
        product = exp_minus_one(Q, n) * (exp_series(Q, n) + 1)
        self.assertEqual(list(product.coeffs), [0] + [2 ** k for k in range(1, n)])

    def test_additive_identity(self):
        s = exp_series(Q, 6)
        self.assertEqual(s + Series.constant(Q, 0, 6), s)

    def test_scalar_multiple(self):
        self.assertEqual(list((exp_series(Q, 5) * 2).coeffs), [2] * 5)

    def test_result_precision_is_minimum(self):
        self.assertEqual((exp_series(Q, 5) * exp_series(Q, 9)).precision, 5)
        self.assertEqual((exp_series(Q, 9) + exp_series(Q, 4)).precision, 4)

    def test_ring_axioms(self):
        rng = random.Random(1)
        for _ in range(10):
            a, b, c = (random_series(rng, 8) for _ in range(3))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a * b, b * a)


class SeriesInverseTests(SimpleTestCase):

    def test_geometric_series(self):
        inv = series_inverse(Series(Q, [1, -1, 0, 0, 0, 0, 0]))
        self.assertEqual(list(inv.coeffs), [factorial(k) for k in range(7)])

    def test_identity(self):
        self.assertEqual(series_inverse(Series.one(Q, 5)), Series.one(Q, 5))

    def test_exponential(self):
        inv = series_inverse(exp_series(Q, 8))
        self.assertEqual(list(inv.coeffs), [(-1) ** k for k in range(8)])
        self.assertEqual(inv * exp_series(Q, 8), Series.one(Q, 8))

    def test_not_invertible(self):
        with self.assertRaisesMessage(NotInvertible, 'not invertible'):
            series_inverse(t_series(Q, 4))


class SeriesDivTests(SimpleTestCase):

    def test_bernoulli_numbers(self):
        b = series_div(t_series(Q, 8), exp_minus_one(Q, 8))
        self.assertEqual(b.precision, 7)
        self.assertEqual(list(b.coeffs[:5]), fr(1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)))

    def test_bernoulli_recurrence_oracle(self):
        b = bernoulli_kernel(Q, 12)
        for n in range(1, 11):
            total = sum(comb(n + 1, j) * b[j] for j in range(n + 1))
            self.assertEqual(total, 0)

    def test_self_quotient(self):
        s = exp_series(Q, 6) + 2
        self.assertEqual(series_div(s, s), Series.one(Q, 6))

    def test_tanh_half(self):
        q = daehee_delta(Q, 8)
        self.assertEqual(q[0], 0)
        self.assertEqual(q[1], Fraction(1, 2))
        self.assertEqual(q[2], 0)
        self.assertEqual(q[3], Fraction(-1, 4))

    def test_quotient_not_series(self):
        with self.assertRaisesMessage(QuotientNotSeries, 'quotient not a power series'):
            series_div(exp_series(Q, 5), t_series(Q, 5))


class SeriesCompositionTests(SimpleTestCase):

    def test_compose_with_t(self):
        f = exp_series(Q, 7)
        self.assertEqual(series_compose(f, t_series(Q, 7)), f)

    def test_exp_of_log(self):
        result = series_compose(exp_series(Q, 9), log1p(Q, 9))
        self.assertEqual(list(result.coeffs), fr(1, 1, 0, 0, 0, 0, 0, 0, 0))

    def test_daehee_prefactor_structure(self):
        n = 8
        outer = exp_series(LAMBDA, n) - LAM
        inner = Series(LAMBDA, [LAMBDA.coerce(c) for c in log_ratio(Q, n).coeffs])
        lhs = series_compose(outer, inner)
        one = LAMBDA.one
        rhs = series_div(
            Series.from_ordinary(LAMBDA, [one - LAM, one + LAM], n),
            Series.from_ordinary(LAMBDA, [1, -1], n),
        )
        self.assertEqual(lhs, rhs)

    def test_compose_requires_zero_constant(self):
        with self.assertRaisesMessage(SeriesDomainError, 'composition requires delta inner series'):
            series_compose(exp_series(Q, 4), exp_series(Q, 4))

    def test_associativity(self):
        rng = random.Random(9)
        for _ in range(5):
            a = random_series(rng, 7)
            b = random_series(rng, 7, lowest=1)
            c = random_series(rng, 7, lowest=1)
            self.assertEqual(
                series_compose(series_compose(a, b), c),
                series_compose(a, series_compose(b, c)),
            )

    def test_precision_monotonicity(self):
        rng = random.Random(4)
        for _ in range(5):
            a = random_series(rng, 10)
            b = random_series(rng, 10, lowest=1)
            self.assertEqual(series_mul(a, b).truncate(6), series_mul(a.truncate(6), b.truncate(6)))
            self.assertEqual(series_compose(a, b).truncate(6), series_compose(a.truncate(6), b.truncate(6)))


class CompInverseTests(SimpleTestCase):

    def test_identity(self):
        self.assertEqual(series_comp_inverse(t_series(Q, 6)), t_series(Q, 6))

    def test_exp_minus_one(self):
        inv = series_comp_inverse(exp_minus_one(Q, 10))
        self.assertEqual(inv, log1p(Q, 10))
        self.assertEqual(series_compose(exp_minus_one(Q, 10), inv), t_series(Q, 10))

    def test_daehee_delta(self):
        inv = series_comp_inverse(daehee_delta(Q, 10))
        self.assertEqual(inv, log_ratio(Q, 10))
        self.assertEqual(list(log_ratio(Q, 6).coeffs), fr(0, 2, 0, 4, 0, 48))

    def test_tstar(self):
        self.assertEqual(series_comp_inverse(tstar_delta(Q, 10)), tstar_inverse(Q, 10))

    def test_not_delta(self):
        with self.assertRaises(NotDelta):
            series_comp_inverse(Series(Q, [0, 0, 2, 1]))

    def test_round_trip_random(self):
        rng = random.Random(2024)
        t = t_series(Q, 16)
        for _ in range(20):
            f = random_delta(rng, 16)
            inv = series_comp_inverse(f)
            self.assertEqual(series_comp_inverse(inv), f)
            self.assertEqual(series_compose(f, inv), t)
            self.assertEqual(series_compose(inv, f), t)


class ElementaryFunctionTests(SimpleTestCase):

    def test_exp_of_zero(self):
        self.assertEqual(series_exp(Series.constant(Q, 0, 5)), Series.one(Q, 5))

    def test_sqrt(self):
        root = sqrt_one_minus_t2(Q, 9)
        ordinary = [root.ordinary(k) for k in range(7)]
        self.assertEqual(ordinary, fr(1, 0, Fraction(-1, 2), 0, Fraction(-1, 8), 0, Fraction(-1, 16)))
        self.assertEqual(root * root, Series.from_ordinary(Q, [1, 0, -1], 9))

    def test_log_difference(self):
        value = series_log(Series.from_ordinary(Q, [1, 1], 8)) - series_log(Series.from_ordinary(Q, [1, -1], 8))
        self.assertEqual(value, log_ratio(Q, 8))
        self.assertEqual(value.ordinary(3), Fraction(2, 3))

    def test_log_of_exp(self):
        rng = random.Random(6)
        for _ in range(5):
            s = random_series(rng, 9, lowest=1)
            self.assertEqual(series_log(series_exp(s)), s)

    def test_exp_of_log_on_units(self):
        rng = random.Random(8)
        for _ in range(5):
            s = Series(Q, [1] + [rng.randint(-3, 3) for _ in range(8)])
            self.assertEqual(series_exp(series_log(s)), s)
            self.assertEqual(series_sqrt(s) * series_sqrt(s), s)

    def test_preconditions(self):
        with self.assertRaises(SeriesDomainError):
            series_exp(exp_series(Q, 4))
        with self.assertRaises(SeriesDomainError):
            series_log(t_series(Q, 4))
        with self.assertRaises(SeriesDomainError):
            series_sqrt(Series.constant(Q, 4, 4))


class PowerTests(SimpleTestCase):

    def test_first_power(self):
        s = exp_series(Q, 6) + 1
        self.assertEqual(series_pow_int(s, 1), s)
        self.assertEqual(series_pow_int(s, 0), Series.one(Q, 6))

    def test_square_over_lambda(self):
        square = series_pow_int(exp_series(LAMBDA, 7) - LAM, 2)
        self.assertEqual(square[0], (1 - LAM) ** 2)
        for n in range(1, 7):
            self.assertEqual(square[n], 2 ** n - 2 * LAM)

    def test_negative_power_is_bernoulli_kernel(self):
        self.assertEqual(series_pow_int(bernoulli_kernel_inverse(Q, 9), -1), bernoulli_kernel(Q, 9))

    def test_negative_power_of_non_invertible(self):
        with self.assertRaisesMessage(NotInvertible, 'negative power of non-invertible series'):
            series_pow_int(t_series(Q, 4), -2)


class OrderTests(SimpleTestCase):

    def test_delta(self):
        s = exp_minus_one(Q, 5)
        self.assertEqual(order(s), 1)
        self.assertEqual(classify(s), SeriesClass.DELTA)

    def test_invertible_over_lambda(self):
        s = frobenius_euler_kernel(6)
        self.assertEqual(s[0], LAMBDA.one)
        self.assertEqual(classify(s), SeriesClass.INVERTIBLE)

    def test_other(self):
        self.assertEqual(classify(Series.monomial(Q, 2, 5)), SeriesClass.OTHER)

    def test_zero_truncation(self):
        with self.assertRaisesMessage(OrderUndefined, 'order undefined at this precision'):
            order(Series.constant(Q, 0, 4))
