from fractions import Fraction

from django.test import SimpleTestCase

from coefficients.exceptions import FamilyParameterError, UnknownFamily
from coefficients.fields import LAMBDA, RATIONALS
from coefficients.ratfunc import LambdaRatFunc
from polyop.operators import apply_series
from polyop.polynomial import Poly
from polyop.stirling import falling_factorial
from series.formal import series_pow_int
from series.library import frobenius_euler_kernel
from umbral.sheffer import verify_duality

from .catalog import ORDERED_KINDS, FamilyId, FamilyKind, family_numbers, family_pair, family_sequence
from .closed_forms import (
    changhee_closed,
    closed_form,
    daehee2_closed,
    remark_s44_form,
)

Q = RATIONALS
LAM = LambdaRatFunc.generator()


def fam(kind, order=None):
    return FamilyId(kind, order)


class FamilySequenceTests(SimpleTestCase):

    def test_bernoulli(self):
        seq = family_sequence(fam(FamilyKind.BERNOULLI, 1), 2)
        self.assertEqual(seq[0], Poly(Q, [1]))
        self.assertEqual(seq[1], Poly(Q, [Fraction(-1, 2), 1]))
        self.assertEqual(seq[2], Poly(Q, [Fraction(1, 6), -1, 1]))

    def test_frobenius_euler(self):
        seq = family_sequence(fam(FamilyKind.FROBENIUS_EULER, 1), 1)
        self.assertEqual(seq[1], Poly(LAMBDA, [-1 / (1 - LAM), 1]))

    def test_daehee(self):
        seq = family_sequence(fam(FamilyKind.DAEHEE), 1)
        self.assertEqual(seq[0], Poly(LAMBDA, [1]))
        self.assertEqual(seq[1], Poly(LAMBDA, [2 / (1 - LAM), 2]))

    def test_daehee_second_kind(self):
        seq = family_sequence(fam(FamilyKind.DAEHEE2), 1)
        self.assertEqual(seq[1], Poly(LAMBDA, [1, 1 - LAM]))

    def test_changhee(self):
        for a in (1, 2, -1):
            seq = family_sequence(fam(FamilyKind.CHANGHEE, a), 1)
            self.assertEqual(seq[1], Poly(LAMBDA, [a / (1 - LAM), 1]))

    def test_negative_bernoulli_order(self):
        seq = family_sequence(fam(FamilyKind.BERNOULLI, -1), 2)
        self.assertEqual(seq[1], Poly(Q, [Fraction(1, 2), 1]))

    def test_order_zero_is_powers(self):
        seq = family_sequence(fam(FamilyKind.FROBENIUS_EULER, 0), 4)
        self.assertEqual(seq[4], Poly.monomial(LAMBDA, 4))

    def test_changhee_order_zero_rejected(self):
        with self.assertRaisesMessage(FamilyParameterError, 'changhee order a must be nonzero'):
            fam(FamilyKind.CHANGHEE, 0)

    def test_unknown_family(self):
        with self.assertRaises(UnknownFamily):
            FamilyId('hermite')

    def test_order_on_unordered_family(self):
        with self.assertRaises(FamilyParameterError):
            fam(FamilyKind.DAEHEE, 2)

    def test_pairs_are_dual(self):
        for kind in FamilyKind:
            fid = fam(kind, 2 if kind in (FamilyKind.BERNOULLI, FamilyKind.CHANGHEE) else None)
            seq = family_sequence(fid, 6)
            self.assertTrue(verify_duality(family_pair(fid, 7), seq), kind)

    def test_pairs_are_dual_to_degree_ten(self):
        fids = [fam(FamilyKind.BERNOULLI, 1)]
        fids += [fam(FamilyKind.FROBENIUS_EULER, alpha) for alpha in (1, 2, 3)]
        fids += [fam(FamilyKind.CHANGHEE, a) for a in (1, 2)]
        fids += [fam(kind) for kind in FamilyKind if kind not in ORDERED_KINDS]
        for fid in fids:
            with self.subTest(family=str(fid)):
                self.assertTrue(verify_duality(family_pair(fid, 11), family_sequence(fid, 10)))


class FamilyNumberTests(SimpleTestCase):

    def test_degree_zero(self):
        self.assertEqual(family_numbers(fam(FamilyKind.BERNOULLI), 0), [1])

    def test_bernoulli_numbers(self):
        numbers = family_numbers(fam(FamilyKind.BERNOULLI), 4)
        self.assertEqual(numbers, [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)])

    def test_changhee_numbers(self):
        numbers = family_numbers(fam(FamilyKind.CHANGHEE, 1), 1)
        self.assertEqual(numbers, [LAMBDA.one, 1 / (1 - LAM)])

    def test_mittag_leffler_numbers(self):
        numbers = family_numbers(fam(FamilyKind.MITTAG_LEFFLER), 6)
        self.assertEqual(numbers, [1, 0, 0, 0, 0, 0, 0])


class ClosedFormTests(SimpleTestCase):

    def test_mittag_leffler_degree_two(self):
        self.assertEqual(closed_form(fam(FamilyKind.MITTAG_LEFFLER), 2), Poly(Q, [0, 0, 4]))

    def test_theorem_one_degree_two(self):
        self.assertEqual(closed_form(fam(FamilyKind.ASSOC_S), 2), Poly(LAMBDA, [0, 2 / (1 - LAM), 1]))
        self.assertEqual(closed_form(fam(FamilyKind.ASSOC_S), 0), Poly(LAMBDA, [1]))

    def test_tstar_degree_one(self):
        self.assertEqual(closed_form(fam(FamilyKind.ASSOC_T), 1), Poly(Q, [0, Fraction(1, 2)]))

    def test_out_of_range(self):
        with self.assertRaises(FamilyParameterError):
            closed_form(fam(FamilyKind.ASSOC_T), 0)

    def test_closed_forms_match_sequences(self):
        cases = [
            (fam(FamilyKind.MITTAG_LEFFLER), 0, 12),
            (fam(FamilyKind.ASSOC_S), 0, 6),
            (fam(FamilyKind.DAEHEE), 0, 8),
            (fam(FamilyKind.MITTAG_LEFFLER_LAMBDA), 1, 6),
            (fam(FamilyKind.ASSOC_T), 1, 8),
        ]
        for fid, lowest, highest in cases:
            seq = family_sequence(fid, highest)
            for n in range(lowest, highest + 1):
                self.assertEqual(closed_form(fid, n), seq[n], (str(fid), n))

    def test_appell_expansion(self):
        for order in (1, 2, 3):
            for kind, highest in ((FamilyKind.BERNOULLI, 10), (FamilyKind.FROBENIUS_EULER, 6)):
                fid = fam(kind, order)
                seq = family_sequence(fid, highest)
                for n in range(highest + 1):
                    self.assertEqual(closed_form(fid, n), seq[n])

    def test_changhee_sum_needs_reciprocal_operator(self):
        for a in (1, 2):
            fid = fam(FamilyKind.CHANGHEE, a)
            seq = family_sequence(fid, 5)
            for n in range(1, 6):
                self.assertEqual(changhee_closed(a, n, reciprocal=True), seq[n])
            self.assertEqual(closed_form(fid, 1), Poly(LAMBDA, [-a / (1 - LAM), 1]))
            self.assertNotEqual(closed_form(fid, 1), seq[1])

    def test_daehee_second_kind_sum(self):
        fid = fam(FamilyKind.DAEHEE2)
        seq = family_sequence(fid, 5)
        for n in range(1, 6):
            self.assertEqual(daehee2_closed(n), seq[n])
        self.assertNotEqual(closed_form(fid, 2), seq[2])

    def test_remark_sequence_orders(self):
        fid = fam(FamilyKind.REMARK_S44)
        seq = family_sequence(fid, 5)
        for n in range(1, 6):
            self.assertEqual(remark_s44_form(n, -1), seq[n])
        self.assertEqual(closed_form(fid, 1), seq[1])
        self.assertNotEqual(closed_form(fid, 2), seq[2])


class OperatorRelationTests(SimpleTestCase):

    def test_daehee_to_mittag_leffler(self):
        daehee = family_sequence(fam(FamilyKind.DAEHEE), 10)
        mittag = family_sequence(fam(FamilyKind.MITTAG_LEFFLER), 10)
        kernel = frobenius_euler_kernel(11)
        for n in range(11):
            self.assertEqual(apply_series(kernel, daehee[n]), mittag[n].convert(LAMBDA))

    def test_changhee_to_falling_factorial(self):
        for a in (1, 2):
            seq = family_sequence(fam(FamilyKind.CHANGHEE, a), 8)
            operator = series_pow_int(frobenius_euler_kernel(9), a)
            for n in range(9):
                self.assertEqual(apply_series(operator, seq[n]), falling_factorial(n).convert(LAMBDA))
