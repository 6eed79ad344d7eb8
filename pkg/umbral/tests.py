import random
from fractions import Fraction
from math import factorial

from django.test import SimpleTestCase

from coefficients.exceptions import NotDelta, NotInvertible, PrecisionError, TransferDomainError
from coefficients.fields import LAMBDA, RATIONALS
from coefficients.ratfunc import LambdaRatFunc
from polyop.operators import apply_series
from polyop.polynomial import Poly, poly_eval
from series.formal import Series, series_div, series_pow_int
from series.library import (
    assoc_s_delta,
    bernoulli_kernel,
    daehee_delta,
    exp_minus_one,
    exp_series,
    frobenius_euler_kernel,
    frobenius_euler_kernel_inverse,
    t_series,
    tstar_delta,
)

from .pairing import expand_by_functionals, multinomial_pairing, pairing
from .pincherle import pincherle, pincherle_commutator, verify_pincherle
from .sheffer import (
    PolySequence,
    ShefferPair,
    associated_sequence,
    binomial_convolution_check,
    binomial_convolution_sides,
    duality_failure,
    sheffer_sequence,
    verify_duality,
)
from .transfer import transfer

Q = RATIONALS
LAM = LambdaRatFunc.generator()


def x_power(n, field=Q):
    return Poly.monomial(field, n)


def powers_sequence(n_max, field=Q):
    return PolySequence(tuple(x_power(n, field) for n in range(n_max + 1)))


def daehee_pair(precision):
    return ShefferPair(frobenius_euler_kernel(precision), daehee_delta(Q, precision), 'daehee')


def changhee_pair(a, precision):
    return ShefferPair(series_pow_int(frobenius_euler_kernel(precision), a), exp_minus_one(Q, precision), 'changhee')


def random_delta(rng, precision):
    coeffs = [0, rng.choice([-2, -1, 1, 2])] + [rng.randint(-2, 2) for _ in range(precision - 2)]
    return Series(Q, coeffs)


class PairingTests(SimpleTestCase):

    def test_kronecker(self):
        for n in range(6):
            for k in range(6):
                expected = factorial(n) if n == k else 0
                self.assertEqual(pairing(Series.monomial(Q, k, 8), x_power(n)), expected)

    def test_exponential_evaluates(self):
        self.assertEqual(pairing(exp_series(Q, 3, y=3), x_power(2)), 9)

    def test_bernoulli_constant(self):
        self.assertEqual(pairing(bernoulli_kernel(Q, 3), x_power(2)), Fraction(1, 6))

    def test_agrees_with_operator_at_zero(self):
        rng = random.Random(31)
        for _ in range(10):
            f = Series(Q, [rng.randint(-3, 3) for _ in range(7)])
            p = Poly(Q, [rng.randint(-3, 3) for _ in range(7)])
            self.assertEqual(pairing(f, p), poly_eval(apply_series(f, p), 0))

    def test_insufficient_precision(self):
        with self.assertRaises(PrecisionError):
            pairing(exp_series(Q, 2), x_power(3))

    def test_expand_by_functionals(self):
        p = Poly(Q, [0, -1, 0, 1])
        self.assertEqual(expand_by_functionals(p), p)

    def test_multinomial_pairing(self):
        self.assertEqual(multinomial_pairing([exp_series(Q, 3), exp_series(Q, 3)], 2), 4)
        self.assertEqual(multinomial_pairing([t_series(Q, 3)], 1), 1)

    def test_multinomial_pairing_three_factors(self):
        rng = random.Random(32)
        for n in range(7):
            fs = [Series(Q, [rng.randint(-3, 3) for _ in range(8)]) for _ in range(3)]
            self.assertEqual(multinomial_pairing(fs, n), (fs[0] * fs[1] * fs[2])[n])


class ShefferSequenceTests(SimpleTestCase):

    def test_identity_pair(self):
        seq = associated_sequence(t_series(Q, 7), 6)
        self.assertEqual(list(seq.polys), [x_power(n) for n in range(7)])

    def test_daehee_first_degree(self):
        seq = sheffer_sequence(daehee_pair(4), 3)
        self.assertEqual(seq[0], Poly(LAMBDA, [1]))
        self.assertEqual(seq[1], Poly(LAMBDA, [2 / (1 - LAM), 2]))

    def test_mittag_leffler(self):
        seq = associated_sequence(daehee_delta(Q, 4), 3)
        self.assertEqual(seq[1], Poly(Q, [0, 2]))
        self.assertEqual(seq[2], Poly(Q, [0, 0, 4]))

    def test_theorem_one_sequence(self):
        seq = associated_sequence(assoc_s_delta(4), 2)
        self.assertEqual(seq[2], Poly(LAMBDA, [0, 2 / (1 - LAM), 1]))

    def test_tstar_first_degree(self):
        seq = associated_sequence(tstar_delta(Q, 4), 2)
        self.assertEqual(seq[1], Poly(Q, [0, Fraction(1, 2)]))

    def test_degrees(self):
        seq = sheffer_sequence(daehee_pair(8), 7)
        self.assertEqual([p.degree for p in seq.polys], list(range(8)))

    def test_pair_validation(self):
        with self.assertRaises(NotInvertible):
            ShefferPair(t_series(Q, 4), t_series(Q, 4))
        with self.assertRaises(NotDelta):
            ShefferPair(Series.one(Q, 4), exp_series(Q, 4))

    def test_degree_zero_is_reciprocal_of_g(self):
        pair = ShefferPair(Series(Q, [2, 1, 0]), t_series(Q, 3))
        self.assertEqual(sheffer_sequence(pair, 0).polys, (Poly(Q, [Fraction(1, 2)]),))
        self.assertEqual(associated_sequence(daehee_delta(Q, 3), 0)[0], Poly(Q, [1]))
        self.assertEqual(sheffer_sequence(daehee_pair(2), 0)[0], Poly(LAMBDA, [1]))

    def test_insufficient_precision(self):
        with self.assertRaises(PrecisionError):
            associated_sequence(t_series(Q, 3), 5)


class DualityTests(SimpleTestCase):

    def test_powers(self):
        pair = ShefferPair.associated(t_series(Q, 8))
        self.assertTrue(verify_duality(pair, powers_sequence(7)))

    def test_daehee(self):
        pair = daehee_pair(11)
        self.assertTrue(verify_duality(pair, sheffer_sequence(pair, 10)))

    def test_perturbed_sequence(self):
        pair = ShefferPair.associated(t_series(Q, 5))
        polys = (Poly(Q, [1]),) + tuple(x_power(n) + 1 for n in range(1, 5))
        self.assertEqual(duality_failure(pair, PolySequence(polys)), (1, 0))

    def test_constructed_sequences_are_dual(self):
        rng = random.Random(33)
        for _ in range(5):
            f = random_delta(rng, 7)
            g = Series(Q, [rng.choice([1, 2, -1])] + [rng.randint(-2, 2) for _ in range(6)])
            pair = ShefferPair(g, f)
            self.assertTrue(verify_duality(pair, sheffer_sequence(pair, 6)))


class TransferTests(SimpleTestCase):

    def test_same_series(self):
        f = daehee_delta(Q, 7)
        seq = associated_sequence(f, 6)
        for n in range(7):
            self.assertEqual(transfer(seq, f, f, n), seq[n])

    def test_theorem_one_route(self):
        q = transfer(powers_sequence(2), t_series(Q, 3), assoc_s_delta(3), 2)
        self.assertEqual(q, Poly(LAMBDA, [0, 2 / (1 - LAM), 1]))

    def test_exp_plus_one_route(self):
        g = series_div(t_series(Q, 4), exp_series(Q, 4) + 1)
        self.assertEqual(transfer(powers_sequence(1), t_series(Q, 3), g, 1), Poly(Q, [0, 2]))

    def test_zeroth_term(self):
        self.assertEqual(transfer(powers_sequence(0), t_series(Q, 2), t_series(Q, 2), 0), Poly(Q, [1]))

    def test_requires_zero_constant_term(self):
        bad = PolySequence((Poly(Q, [1]), Poly(Q, [1, 1])))
        with self.assertRaisesMessage(TransferDomainError, 'transfer formula requires pₙ(0) = 0'):
            transfer(bad, t_series(Q, 3), t_series(Q, 3), 1)

    def test_requires_delta(self):
        with self.assertRaises(NotDelta):
            transfer(powers_sequence(1), exp_series(Q, 3), t_series(Q, 3), 1)

    def test_matches_associated_sequence(self):
        rng = random.Random(34)
        for _ in range(5):
            f = random_delta(rng, 8)
            g = random_delta(rng, 8)
            p = associated_sequence(f, 6)
            q = associated_sequence(g, 6)
            for n in range(7):
                self.assertEqual(transfer(p, f, g, n), q[n])


class PincherleTests(SimpleTestCase):

    def test_exponential(self):
        self.assertEqual(pincherle(exp_series(Q, 6)), exp_series(Q, 5))

    def test_square(self):
        self.assertEqual(pincherle(Series.monomial(Q, 2, 6)), t_series(Q, 5) * 2)

    def test_frobenius_euler_operator(self):
        self.assertTrue(verify_pincherle(frobenius_euler_kernel_inverse(6), x_power(3)))

    def test_commutator_on_powers_to_degree_eight(self):
        for label, g in (('exp', exp_series(Q, 11)), ('frobenius-euler', frobenius_euler_kernel_inverse(11))):
            for n in range(9):
                with self.subTest(g=label, n=n):
                    self.assertTrue(verify_pincherle(g, x_power(n)))

    def test_commutator_matches_derivative(self):
        rng = random.Random(35)
        for _ in range(5):
            g = Series(Q, [rng.randint(-3, 3) for _ in range(11)])
            for n in range(9):
                self.assertEqual(pincherle_commutator(g, x_power(n)), apply_series(pincherle(g), x_power(n)))


class BinomialConvolutionTests(SimpleTestCase):

    def test_powers(self):
        pair = ShefferPair.associated(t_series(Q, 8))
        for y in (0, 1, -1, Fraction(1, 2)):
            self.assertTrue(binomial_convolution_check(pair, 7, y))

    def test_daehee(self):
        self.assertTrue(binomial_convolution_check(daehee_pair(9), 8, 1))

    def test_changhee(self):
        pair = changhee_pair(2, 9)
        self.assertTrue(binomial_convolution_check(pair, 8, -1))
        self.assertTrue(binomial_convolution_check(pair, 8, -1, swapped=True))

    def test_mirrored_form(self):
        self.assertTrue(binomial_convolution_check(daehee_pair(7), 6, Fraction(1, 2), swapped=True))

    def test_daehee_and_changhee_grid(self):
        pairs = (('daehee', daehee_pair(9)), ('changhee(1)', changhee_pair(1, 9)), ('changhee(2)', changhee_pair(2, 9)))
        for label, pair in pairs:
            seq = sheffer_sequence(pair, 8)
            g = pair.g.truncate(9)
            for y in (0, 1, -1, Fraction(1, 2)):
                for swapped in (False, True):
                    for n in range(9):
                        with self.subTest(pair=label, y=y, swapped=swapped, n=n):
                            lhs, rhs = binomial_convolution_sides(seq, g, n, y, swapped)
                            self.assertEqual(lhs, rhs)
