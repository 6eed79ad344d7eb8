import random
from fractions import Fraction

from django.test import SimpleTestCase

from .exceptions import DivisionByZero, ExcludedLambda, PoleError, VariantMismatch
from .fields import LAMBDA, RATIONALS, field_of, scalar_arith, scalar_from_json, scalar_to_json
from .lambda_poly import LambdaPoly, poly_gcd
from .ratfunc import LambdaRatFunc, eval_at_lambda, ratfunc_normalize

LAM = LambdaRatFunc.generator()


def lam_poly(*coeffs):
    return LambdaPoly(coeffs)


def random_ratfunc(rng):
    num = LambdaPoly([rng.randint(-3, 3) for _ in range(rng.randint(0, 3))])
    den = LambdaPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))])
    while den.is_zero():
        den = LambdaPoly([rng.randint(-3, 3) for _ in range(2)])
    return ratfunc_normalize(num, den)


class RatfuncNormalizeTests(SimpleTestCase):

    def test_gcd_cancellation(self):
        value = ratfunc_normalize(lam_poly(-1, 0, 1), lam_poly(-1, 1))
        self.assertEqual(value.num, lam_poly(1, 1))
        self.assertEqual(value.den, lam_poly(1))

    def test_zero_is_zero_over_one(self):
        value = ratfunc_normalize(LambdaPoly(), lam_poly(2, 1))
        self.assertTrue(value.num.is_zero())
        self.assertEqual(value.den, lam_poly(1))

    def test_monic_denominator(self):
        value = ratfunc_normalize(lam_poly(0, 2), lam_poly(4))
        self.assertEqual(value.num.coeffs, (Fraction(0), Fraction(1, 2)))
        self.assertEqual(value.den, lam_poly(1))

    def test_zero_denominator(self):
        with self.assertRaisesMessage(DivisionByZero, 'division by zero polynomial'):
            ratfunc_normalize(lam_poly(1), LambdaPoly())

    def test_idempotent(self):
        rng = random.Random(7)
        for _ in range(30):
            value = random_ratfunc(rng)
            again = ratfunc_normalize(value.num, value.den)
            self.assertEqual(again.num.coeffs, value.num.coeffs)
            self.assertEqual(again.den.coeffs, value.den.coeffs)

    def test_equal_elements_share_canonical_form(self):
        a = ratfunc_normalize(lam_poly(2, 2), lam_poly(-2, 0, 2))
        b = ratfunc_normalize(lam_poly(-1), lam_poly(1, -1))
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))


class PolyGcdTests(SimpleTestCase):

    def test_common_factor(self):
        # (l - 1)(l + 2) and (l - 1)^2
        a = lam_poly(-2, 1, 1)
        b = lam_poly(1, -2, 1)
        self.assertEqual(poly_gcd(a, b), lam_poly(-1, 1))

    def test_coprime(self):
        self.assertEqual(poly_gcd(lam_poly(1, 1), lam_poly(-1, 1)), lam_poly(1))

    def test_rational_coefficients(self):
        a = lam_poly(Fraction(-1, 2), Fraction(1, 2)) * lam_poly(3, 1)
        b = lam_poly(Fraction(-1, 3), Fraction(1, 3))
        self.assertEqual(poly_gcd(a, b), lam_poly(-1, 1))


class ScalarArithTests(SimpleTestCase):

    def test_rational_sum(self):
        self.assertEqual(scalar_arith(Fraction(1, 2), Fraction(1, 3), 'add'), Fraction(5, 6))

    def test_inverse_cancellation(self):
        one_minus = LambdaRatFunc.constant(1) - LAM
        inv = scalar_arith(LAMBDA.one, one_minus, 'div')
        self.assertEqual(inv.num, lam_poly(-1))
        self.assertEqual(inv.den, lam_poly(-1, 1))
        self.assertEqual(scalar_arith(inv, one_minus, 'mul'), LAMBDA.one)

    def test_common_denominator_subtraction(self):
        den = LAM - 1
        self.assertEqual(scalar_arith(LAM / den, 1 / den, 'sub'), LAMBDA.one)

    def test_division_by_zero(self):
        with self.assertRaises(DivisionByZero):
            scalar_arith(Fraction(1), Fraction(0), 'div')
        with self.assertRaises(DivisionByZero):
            scalar_arith(LAM, LAMBDA.zero, 'div')

    def test_variant_mismatch(self):
        with self.assertRaises(VariantMismatch):
            scalar_arith(Fraction(1), LAM, 'add')
        with self.assertRaises(VariantMismatch):
            LAM + Fraction(1, 2)

    def test_field_axioms(self):
        rng = random.Random(11)
        for _ in range(25):
            a, b, c = (random_ratfunc(rng) for _ in range(3))
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a * b, b * a)
            if not a.is_zero():
                self.assertEqual(a * a.inverse(), LAMBDA.one)

    def test_sum_products_matches_naive_sum(self):
        rng = random.Random(5)
        terms = [(rng.randint(-4, 4), random_ratfunc(rng), random_ratfunc(rng)) for _ in range(8)]
        naive = LAMBDA.zero
        for c, a, b in terms:
            naive = naive + a * b * c
        self.assertEqual(LAMBDA.sum_products(terms), naive)

    def test_field_of(self):
        self.assertIs(field_of(Fraction(3)), RATIONALS)
        self.assertIs(field_of(LAM), LAMBDA)


class EvalAtLambdaTests(SimpleTestCase):

    def test_direct_substitution(self):
        value = 2 / (1 - LAM)
        self.assertEqual(eval_at_lambda(value, -1), Fraction(1))
        self.assertEqual(eval_at_lambda(LAM, Fraction(3, 2)), Fraction(3, 2))

    def test_excluded_point(self):
        with self.assertRaisesMessage(ExcludedLambda, 'lambda must differ from 1'):
            eval_at_lambda(1 / (LAM - 1), 1)

    def test_pole(self):
        with self.assertRaises(PoleError):
            eval_at_lambda(1 / (LAM + 2), -2)

    def test_ring_homomorphism(self):
        rng = random.Random(3)
        checked = 0
        for _ in range(40):
            a, b = random_ratfunc(rng), random_ratfunc(rng)
            for v in (Fraction(-1), Fraction(2), Fraction(1, 3)):
                try:
                    lhs = eval_at_lambda(a * b, v)
                    rhs = eval_at_lambda(a, v) * eval_at_lambda(b, v)
                except PoleError:
                    continue
                self.assertEqual(lhs, rhs)
                checked += 1
        self.assertGreater(checked, 0)


class ScalarJsonTests(SimpleTestCase):

    def test_rational_document(self):
        self.assertEqual(scalar_to_json(Fraction(-3, 4)), {'num': '-3', 'den': '4'})

    def test_lambda_document_round_trip(self):
        value = (LAM + 1) / (LAM - 1) ** 2
        self.assertEqual(scalar_from_json(scalar_to_json(value)), value)
