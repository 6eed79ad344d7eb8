import json
from fractions import Fraction

from django.test import SimpleTestCase, TestCase, override_settings

from coefficients.exceptions import IdentityParameterError, UnknownIdentity
from coefficients.fields import LAMBDA
from polyop.polynomial import Poly

from .models import VerificationRun
from .registry import REGISTRY, IdentityId, VerificationContext, verify, verify_all
from .report import DegreeVerdict, IdentityReport, Mismatch, Verdict, compare_polys
from .utils import record_report


class VerifyTests(SimpleTestCase):

    def test_theorem_one_passes(self):
        report = verify(IdentityId.THM1, 6)
        self.assertTrue(report.passed)
        self.assertEqual([d.n for d in report.per_degree], list(range(7)))
        self.assertIsNone(report.variant_note)

    def test_degree_zero(self):
        report = verify('EQ18', 0)
        self.assertTrue(report.passed)
        self.assertEqual(len(report.per_degree), 1)

    def test_theorem_one_at_degree_zero(self):
        report = verify(IdentityId.THM1, 0)
        self.assertTrue(report.passed)
        self.assertEqual([d.n for d in report.per_degree], [0])

    def test_unknown_identity(self):
        with self.assertRaises(UnknownIdentity):
            verify('THM9', 3)

    def test_n_max_below_first_degree(self):
        with self.assertRaises(IdentityParameterError):
            verify(IdentityId.EQ20, 0)

    def test_unknown_parameter(self):
        with self.assertRaises(IdentityParameterError):
            verify(IdentityId.THM1, 2, {'a': 1})

    def test_parameter_ranges(self):
        with self.assertRaises(IdentityParameterError):
            verify(IdentityId.THM3_EQ36, 2, {'a': 0})
        with self.assertRaises(IdentityParameterError):
            verify(IdentityId.EQ39, 2, {'b': -1})
        with self.assertRaises(IdentityParameterError):
            verify(IdentityId.THM5, 2, {'a': '1'})

    def test_defaults_fill_params(self):
        report = verify(IdentityId.THM5, 2, {'b': 1})
        self.assertEqual(report.params, {'a': 1, 'b': 1})

    def test_every_identity_registered(self):
        self.assertEqual(set(REGISTRY), set(IdentityId))


class DerivationTests(SimpleTestCase):

    def test_transfer_chain_lines(self):
        self.assertTrue(verify(IdentityId.EQ20, 6).passed)

    def test_mittag_leffler_chain(self):
        report = verify(IdentityId.EQ21_24_CHAIN, 5)
        self.assertTrue(report.passed)

    def test_remark_a_and_b(self):
        for identity in (IdentityId.EQ28, IdentityId.EQ29, IdentityId.EQ31):
            with self.subTest(identity=identity):
                self.assertTrue(verify(identity, 6).passed)

    def test_theorem_five_parameter_grid(self):
        for a, b in ((1, 1), (1, 2), (2, 1)):
            with self.subTest(a=a, b=b):
                self.assertTrue(verify(IdentityId.THM5, 6, {'a': a, 'b': b}).passed)

    def test_lambda_mittag_leffler(self):
        self.assertTrue(verify(IdentityId.THM6_EQ49, 8).passed)
        self.assertTrue(verify(IdentityId.EQ50, 8).passed)

    def test_tstar(self):
        self.assertTrue(verify(IdentityId.EQ53_TSTAR, 10).passed)

    def test_bernoulli_associated_sequence(self):
        self.assertTrue(verify(IdentityId.EQ39, 5).passed)

    def test_machinery_identities(self):
        self.assertTrue(verify(IdentityId.EQ13_CONV, 5).passed)
        self.assertTrue(verify(IdentityId.EQ9_MULTI, 6).passed)

    def test_perturbation_is_localized(self):
        ctx = VerificationContext(3, {})
        name, lhs, rhs = REGISTRY[IdentityId.THM1].steps(ctx, 3)[1]
        self.assertEqual(name, 'transfer')
        self.assertIsNone(compare_polys(lhs, rhs))
        mismatch = compare_polys(lhs, rhs + Poly.monomial(LAMBDA, 2), name)
        self.assertEqual(mismatch.x_power, 2)
        self.assertEqual(mismatch.step, 'transfer')
        self.assertEqual(mismatch.rhs - mismatch.lhs, 1)


class MisprintAdjudicationTests(SimpleTestCase):

    def test_theorem_two_extra_factor(self):
        report = verify(IdentityId.THM2_EQ26, 3)
        self.assertTrue(report.passed)
        self.assertTrue(report.variant_note.startswith('pincherle-form matches'))
        printed = next(v for v in report.variants if v.name == 'printed')
        self.assertFalse(printed.matched)
        self.assertEqual(printed.per_degree[0].verdict, Verdict.FAIL)
        self.assertEqual(printed.per_degree[0].first_mismatch.step, 'closed-form')

    def test_eq30(self):
        report = verify(IdentityId.EQ30, 4)
        self.assertTrue(report.variant_note.startswith('printed matches'))

    def test_eq51(self):
        report = verify(IdentityId.EQ51, 4)
        self.assertTrue(report.variant_note.startswith('theorem6-index matches'))
        self.assertTrue(report.passed)

    def test_theorem_three_operator_orientation(self):
        report = verify(IdentityId.THM3_EQ36, 4)
        self.assertTrue(report.variant_note.startswith('reciprocal-operator matches'))
        printed = report.variants[0]
        self.assertEqual(printed.name, 'printed')
        first = printed.per_degree[0]
        self.assertEqual(first.n, 1)
        self.assertEqual(first.first_mismatch.step, 'operator')
        self.assertEqual(first.first_mismatch.x_power, 0)

    def test_theorem_four_note_is_stable(self):
        short = verify(IdentityId.THM4_EQ38, 3)
        longer = verify(IdentityId.THM4_EQ38, 5)
        self.assertTrue(short.variant_note.startswith('eq37-pair matches'))
        self.assertEqual(short.variant_note, longer.variant_note)

    def test_eq40_superscript(self):
        report = verify(IdentityId.EQ40_41, 4)
        self.assertTrue(report.variant_note.startswith('superscript-bn matches'))
        equal_orders = verify(IdentityId.EQ40_41, 4, {'a': 1, 'b': 1})
        self.assertEqual(equal_orders.variant_note, 'printed, superscript-bn all match at every tested degree')
        self.assertTrue(equal_orders.passed)

    def test_remark_order_sign(self):
        report = verify(IdentityId.REMARK45, 4)
        self.assertTrue(report.variant_note.startswith('negative-order matches'))


class SpotCheckTests(SimpleTestCase):

    @override_settings(UMBRA_SPOT_LAMBDAS=(Fraction(3),))
    def test_spot_values_from_settings(self):
        report = verify(IdentityId.THM1, 3)
        self.assertEqual(len(report.spot_checks), 1)
        check = report.spot_checks[0]
        self.assertEqual(check.value, 3)
        self.assertGreater(check.checked, 0)
        self.assertEqual(check.disagreements, ())

    def test_rational_identity_has_no_spot_checks(self):
        self.assertEqual(verify(IdentityId.EQ53_TSTAR, 3).spot_checks, ())

    def test_disabled(self):
        self.assertEqual(verify(IdentityId.THM1, 3, spot_check=False).spot_checks, ())


class ReportTests(SimpleTestCase):

    def test_json_round_trip(self):
        report = verify(IdentityId.THM2_EQ26, 2)
        doc = json.loads(json.dumps(report.to_json()))
        self.assertEqual(IdentityReport.from_json(doc), report)

    def test_passing_degree_has_no_mismatch(self):
        doc = DegreeVerdict(2, Verdict.PASS).to_json()
        self.assertEqual(doc, {'n': 2, 'verdict': 'pass'})
        with self.assertRaises(ValueError):
            DegreeVerdict(1, Verdict.FAIL)

    def test_verify_all_order(self):
        reports = verify_all(1)
        self.assertEqual([r.id for r in reports], [i.value for i in IdentityId])
        self.assertTrue(all(r.passed for r in reports))

    def test_verify_all_to_degree_six(self):
        reports = verify_all(6)
        self.assertEqual([r.id for r in reports], [i.value for i in IdentityId])
        for report in reports:
            with self.subTest(identity=report.id):
                self.assertTrue(report.passed)


class LedgerTests(TestCase):

    def test_record_passing_report(self):
        run = record_report(verify(IdentityId.THM1, 2))
        self.assertEqual(VerificationRun.objects.count(), 1)
        self.assertTrue(run.passed)
        self.assertEqual(run.n_max, 2)
        self.assertEqual(run.failed_degrees, [])
        self.assertEqual(run.report['id'], 'THM1')

    def test_record_failing_report(self):
        report = IdentityReport(
            id='EQ18',
            params={},
            per_degree=(
                DegreeVerdict(0, Verdict.PASS),
                DegreeVerdict(1, Verdict.FAIL, Mismatch(0, Fraction(1), Fraction(2), 'operator')),
            ),
        )
        run = record_report(report)
        run.refresh_from_db()
        self.assertFalse(run.passed)
        self.assertEqual(run.failed_degrees, [1])
        self.assertEqual(run.variant_note, '')
        self.assertEqual(IdentityReport.from_json(run.report), report)
