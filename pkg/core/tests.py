import json
import os
import tempfile
from fractions import Fraction
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from coefficients.fields import LAMBDA, RATIONALS
from coefficients.lambda_poly import LambdaPoly
from coefficients.ratfunc import LambdaRatFunc
from identities.models import VerificationRun
from identities.report import DegreeVerdict, IdentityReport, Mismatch, Verdict
from polyop.polynomial import Poly

from .jobs import JobSpec, MalformedJob, parse_batch, parse_lambda
from .rendering import lambda_poly_plain, poly_latex, poly_plain, report_plain, scalar_plain


def run_umbra(*args):
    out = StringIO()
    call_command('umbra', *args, stdout=out)
    return out.getvalue()


def one_minus_lambda():
    return LambdaRatFunc(LambdaPoly([1, -1]))


class RenderingTests(SimpleTestCase):

    def test_lambda_polynomial_ascending(self):
        self.assertEqual(lambda_poly_plain(LambdaPoly([1, -1])), '1-lambda')
        self.assertEqual(lambda_poly_plain(LambdaPoly([0, 0, 3])), '3*lambda^2')

    def test_denominator_displayed_with_positive_constant(self):
        value = LambdaRatFunc(LambdaPoly([2]), LambdaPoly([1, -1]))
        self.assertEqual(scalar_plain(value), '2/(1-lambda)')

    def test_negative_constant_term_keeps_sign_outside(self):
        value = LambdaRatFunc(LambdaPoly([-1]), LambdaPoly([1, -1]))
        self.assertEqual(poly_plain(Poly(LAMBDA, [value, 1])), 'x - 1/(1-lambda)')
        self.assertEqual(poly_plain(Poly(LAMBDA, [-value, 1])), 'x + 1/(1-lambda)')

    def test_rationals(self):
        self.assertEqual(scalar_plain(Fraction(-3, 4)), '-3/4')
        self.assertEqual(scalar_plain(Fraction(5)), '5')

    def test_poly_descending(self):
        p = Poly(RATIONALS, [Fraction(-1, 2), 0, 1])
        self.assertEqual(poly_plain(p), 'x^2 - 1/2')
        self.assertEqual(poly_plain(Poly(RATIONALS, [0, Fraction(1, 3)])), '(1/3)*x')
        self.assertEqual(poly_plain(Poly.zero(LAMBDA)), '0')

    def test_compound_lambda_coefficient(self):
        p = Poly(LAMBDA, [0, one_minus_lambda()])
        self.assertEqual(poly_plain(p), '(1-lambda)*x')

    def test_latex(self):
        p = Poly(RATIONALS, [Fraction(1, 2), 0, 1])
        self.assertEqual(poly_latex(p), r'x^{2} + \frac{1}{2}')

    def test_failing_report(self):
        report = IdentityReport(
            id='EQ18',
            params={},
            per_degree=(
                DegreeVerdict(0, Verdict.PASS),
                DegreeVerdict(1, Verdict.FAIL, Mismatch(0, Fraction(1), Fraction(2), 'operator')),
            ),
        )
        self.assertEqual(
            report_plain(report),
            'EQ18: fail\n  n=0 pass\n  n=1 fail at x^0 in step operator: lhs 1, rhs 2',
        )


class JobSpecTests(SimpleTestCase):

    def test_lambda_must_differ_from_one(self):
        with self.assertRaisesMessage(Exception, 'lambda must differ from 1'):
            parse_lambda('1')
        self.assertEqual(parse_lambda('-1/2'), Fraction(-1, 2))
        self.assertEqual(parse_lambda(3), Fraction(3))

    def test_missing_flag(self):
        with self.assertRaisesMessage(MalformedJob, 'expand needs --n'):
            JobSpec('expand', family='daehee')
        with self.assertRaisesMessage(MalformedJob, 'verify needs --id'):
            JobSpec('verify')

    def test_record_validation(self):
        with self.assertRaises(MalformedJob):
            JobSpec.from_record({'command': 'verify', 'id': 'THM1', 'n_max': '4'})
        with self.assertRaises(MalformedJob):
            JobSpec.from_record({'command': 'verify', 'identity': 'THM1'})
        with self.assertRaises(MalformedJob):
            JobSpec.from_record(['verify'])

    def test_malformed_batch_names_line(self):
        with self.assertRaisesMessage(MalformedJob, 'line 2'):
            parse_batch(['{"command": "verify", "id": "THM1"}', '{not json'])

    def test_blank_lines_skipped(self):
        jobs = parse_batch(['', '{"command": "verify-all", "n_max": 1}', '  '])
        self.assertEqual([number for number, _ in jobs], [2])


class CommandTests(SimpleTestCase):

    def test_expand_daehee(self):
        self.assertEqual(run_umbra('expand', '--family', 'daehee', '--n', '1', '--format', 'plain'),
                         '2*x + 2/(1-lambda)\n')

    def test_expand_bernoulli_zero(self):
        self.assertEqual(run_umbra('expand', '--family', 'bernoulli', '--order', '1', '--n', '0'), '1\n')

    def test_expand_frobenius_euler(self):
        self.assertEqual(
            run_umbra('expand', '--family', 'frobenius-euler', '--order', '1', '--n', '1'),
            'x - 1/(1-lambda)\n',
        )

    def test_expand_specialized(self):
        self.assertEqual(run_umbra('expand', '--family', 'daehee', '--n', '1', '--lambda', '2'), '2*x - 2\n')

    def test_expand_json(self):
        doc = json.loads(run_umbra('expand', '--family', 'bernoulli', '--n', '1', '--format', 'json'))
        self.assertEqual(doc['family'], 'bernoulli(1)')
        self.assertEqual(doc['poly']['var'], 'x')
        self.assertEqual(doc['poly']['field'], 'rational')
        self.assertEqual(doc['poly']['coeffs'][0], {'num': '-1', 'den': '2'})

    def test_lambda_one_is_usage_error(self):
        with self.assertRaises(CommandError) as ctx:
            run_umbra('expand', '--family', 'daehee', '--n', '1', '--lambda', '1')
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('lambda must differ from 1', str(ctx.exception))

    def test_unknown_family(self):
        with self.assertRaises(CommandError) as ctx:
            run_umbra('expand', '--family', 'hermite', '--n', '1')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_verify_json(self):
        doc = json.loads(run_umbra('verify', '--id', 'THM1', '--n-max', '8', '--format', 'json'))
        self.assertEqual(doc['id'], 'THM1')
        self.assertEqual([d['n'] for d in doc['per_degree']], list(range(9)))
        self.assertTrue(all(d['verdict'] == 'pass' for d in doc['per_degree']))

    def test_verify_output_is_deterministic(self):
        args = ('verify', '--id', 'THM2_EQ26', '--n-max', '3', '--format', 'json')
        self.assertEqual(run_umbra(*args), run_umbra(*args))

    def test_verify_unknown_identity(self):
        with self.assertRaises(CommandError) as ctx:
            run_umbra('verify', '--id', 'THM9')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_verify_plain_note(self):
        out = run_umbra('verify', '--id', 'REMARK45', '--n-max', '3')
        self.assertTrue(out.startswith('REMARK45: pass\n'))
        self.assertIn('variants: negative-order matches', out)

    def test_series(self):
        self.assertEqual(
            run_umbra('series', '--name', 'exp', '--n', '4'),
            'exp = e^t\n1 + t + (1/2)*t^2 + (1/6)*t^3 + O(t^4)\n',
        )

    def test_pair_duality(self):
        out = run_umbra('pair', '--family', 'assoc-t', '--n', '3')
        self.assertTrue(out.endswith('duality to n = 3: pass\n'))

    def test_no_subcommand(self):
        with self.assertRaises(CommandError) as ctx:
            run_umbra()
        self.assertEqual(ctx.exception.returncode, 2)


class BatchTests(SimpleTestCase):

    def write_batch(self, text):
        fd, path = tempfile.mkstemp(suffix='.jsonl')
        with os.fdopen(fd, 'w', encoding='utf-8') as fh:
            fh.write(text)
        self.addCleanup(os.remove, path)
        return path

    def test_two_passing_jobs(self):
        path = self.write_batch(
            '{"command": "verify", "id": "THM1", "n_max": 4}\n'
            '{"command": "verify", "id": "EQ31", "n_max": 4}\n'
        )
        records = [json.loads(line) for line in run_umbra('--batch', path).splitlines()]
        self.assertEqual([r['line'] for r in records], [1, 2])
        self.assertEqual([r['exit_code'] for r in records], [0, 0])
        self.assertEqual([r['result']['id'] for r in records], ['THM1', 'EQ31'])

    def test_empty_file(self):
        self.assertEqual(run_umbra('--batch', self.write_batch('')), '')

    def test_malformed_line(self):
        path = self.write_batch('{"command": "verify", "id": \n')
        with self.assertRaises(CommandError) as ctx:
            run_umbra('--batch', path)
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('line 1', str(ctx.exception))

    def test_failing_job_sets_exit_code(self):
        path = self.write_batch(
            '{"command": "expand", "family": "daehee", "n": 1, "format": "plain"}\n'
            '{"command": "expand", "family": "hermite", "n": 1}\n'
        )
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('umbra', '--batch', path, stdout=out)
        self.assertEqual(ctx.exception.returncode, 2)
        first, second = [json.loads(line) for line in out.getvalue().splitlines()]
        self.assertEqual(first['result'], '2*x + 2/(1-lambda)')
        self.assertEqual(second['exit_code'], 2)
        self.assertIn('unknown family', second['result']['error'])

    def test_file_not_utf8(self):
        fd, path = tempfile.mkstemp(suffix='.jsonl')
        with os.fdopen(fd, 'wb') as fh:
            fh.write(b'\xff\xfe{"command": "expand"}\n')
        self.addCleanup(os.remove, path)
        with self.assertRaises(CommandError) as ctx:
            run_umbra('--batch', path)
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('not UTF-8', str(ctx.exception))

    def test_missing_file(self):
        with self.assertRaises(CommandError) as ctx:
            run_umbra('--batch', os.path.join(tempfile.gettempdir(), 'no-such-umbra-batch.jsonl'))
        self.assertEqual(ctx.exception.returncode, 2)


class RecordTests(TestCase):

    def test_verify_record(self):
        run_umbra('verify', '--id', 'THM1', '--n-max', '2', '--record')
        run = VerificationRun.objects.get()
        self.assertEqual(run.identity, 'THM1')
        self.assertTrue(run.passed)

    def test_without_record_nothing_stored(self):
        run_umbra('verify', '--id', 'THM1', '--n-max', '2')
        self.assertFalse(VerificationRun.objects.exists())
