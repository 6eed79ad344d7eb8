"""
Plain text, JSON and LaTeX renderings of scalars, series, polynomials and reports.

Plain syntax: x-polynomials in descending powers joined by " + " / " - ",
explicit "*", lambda spelled out, rationals as p/q. Every renderer is a pure
function of its input, so output is byte-for-byte reproducible.
"""
import json
from fractions import Fraction

from django.db import models

from coefficients.fields import scalar_to_json
from coefficients.lambda_poly import LambdaPoly
from coefficients.ratfunc import LambdaRatFunc


class OutputFormat(models.TextChoices):
    PLAIN = 'plain', 'Plain text'
    JSON = 'json', 'JSON'
    LATEX = 'latex', 'LaTeX'


def dumps(doc):
    return json.dumps(doc, sort_keys=True, separators=(',', ':'))


# Scalars

def _rational(c):
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _monomial(c, power, var):
    """One signed term c * var^power, sign kept on the front."""
    if power == 0:
        return _rational(c)
    base = var if power == 1 else f"{var}^{power}"
    if c == 1:
        return base
    if c == -1:
        return f"-{base}"
    return f"{_rational(c)}*{base}"


def lambda_poly_plain(p):
    """Ascending powers of lambda, no spaces: 1-lambda, 1+2*lambda^2."""
    if p.is_zero():
        return '0'
    out = ''
    for power, c in enumerate(p.coeffs):
        if c == 0:
            continue
        term = _monomial(c, power, 'lambda')
        if out and not term.startswith('-'):
            out += '+'
        out += term
    return out


def _display_parts(value):
    """Numerator and denominator with the denominator's constant term made non-negative."""
    num, den = value.num, value.den
    if den.coeffs and den.coeffs[0] < 0:
        num = LambdaPoly([-c for c in num.coeffs])
        den = LambdaPoly([-c for c in den.coeffs])
    return num, den


def _term_count(p):
    return sum(1 for c in p.coeffs if c != 0)


def scalar_plain(value):
    if not isinstance(value, LambdaRatFunc):
        return _rational(value)
    num, den = _display_parts(value)
    top = lambda_poly_plain(num)
    if den.is_one():
        return top
    if _term_count(num) > 1:
        top = f"({top})"
    bottom = lambda_poly_plain(den)
    if _term_count(den) > 1 or den.degree > 0 and den.coeffs[-1] != 1:
        bottom = f"({bottom})"
    return f"{top}/{bottom}"


def _is_compound(value):
    if not isinstance(value, LambdaRatFunc):
        return isinstance(value, Fraction) and value.denominator != 1
    return not value.den.is_one() or _term_count(value.num) > 1


def _is_negative_simple(value):
    """True when the displayed numerator is a single negative term."""
    if isinstance(value, LambdaRatFunc):
        num, _ = _display_parts(value)
        if _term_count(num) != 1:
            return False
        return num.leading < 0
    return value < 0


# Polynomials in x

def poly_plain(p, var='x'):
    """Descending powers: 2*x + 2/(1-lambda)."""
    if p.is_zero():
        return '0'
    pieces = []
    for power in range(p.degree, -1, -1):
        c = p.coeffs[power]
        if p.field.is_zero(c):
            continue
        negative = _is_negative_simple(c)
        if negative:
            c = -c
        if power == 0:
            body = scalar_plain(c)
        else:
            base = var if power == 1 else f"{var}^{power}"
            if c == 1:
                body = base
            elif _is_compound(c):
                body = f"({scalar_plain(c)})*{base}"
            else:
                body = f"{scalar_plain(c)}*{base}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return ''.join(pieces)


def series_plain(s):
    """Ordinary coefficients, ascending powers of t, with the truncation order."""
    pieces = []
    for k in range(s.precision):
        c = s.ordinary(k)
        if s.field.is_zero(c):
            continue
        negative = _is_negative_simple(c)
        if negative:
            c = -c
        if k == 0:
            body = scalar_plain(c)
        else:
            base = 't' if k == 1 else f"t^{k}"
            if c == 1:
                body = base
            elif _is_compound(c):
                body = f"({scalar_plain(c)})*{base}"
            else:
                body = f"{scalar_plain(c)}*{base}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    pieces.append(f" + O(t^{s.precision})" if pieces else f"O(t^{s.precision})")
    return ''.join(pieces)


# JSON documents

def poly_json(p, var='x'):
    """Ascending coefficients of p in var."""
    return {'var': var, 'field': p.field.name, 'coeffs': [scalar_to_json(c) for c in p.coeffs]}


def series_json(s):
    """Exponential-convention coefficients a_k of sum a_k t^k / k!."""
    return {
        'field': s.field.name,
        'precision': s.precision,
        'convention': 'exponential',
        'coeffs': [scalar_to_json(c) for c in s.coeffs],
    }


# LaTeX

def _lambda_poly_latex(p):
    if p.is_zero():
        return '0'
    out = ''
    for power, c in enumerate(p.coeffs):
        if c == 0:
            continue
        sign = '-' if c < 0 else '+'
        c = abs(c)
        if power == 0:
            body = _rational_latex(c)
        else:
            base = r'\lambda' if power == 1 else rf'\lambda^{{{power}}}'
            body = base if c == 1 else f"{_rational_latex(c)}{base}"
        if not out:
            out = body if sign == '+' else f"-{body}"
        else:
            out += f" {sign} {body}"
    return out


def _rational_latex(c):
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    sign = '-' if c < 0 else ''
    return rf"{sign}\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"


def scalar_latex(value):
    if not isinstance(value, LambdaRatFunc):
        return _rational_latex(value)
    num, den = _display_parts(value)
    if den.is_one():
        return _lambda_poly_latex(num)
    return rf"\frac{{{_lambda_poly_latex(num)}}}{{{_lambda_poly_latex(den)}}}"


def poly_latex(p, var='x'):
    if p.is_zero():
        return '0'
    pieces = []
    for power in range(p.degree, -1, -1):
        c = p.coeffs[power]
        if p.field.is_zero(c):
            continue
        negative = _is_negative_simple(c)
        if negative:
            c = -c
        base = '' if power == 0 else (var if power == 1 else f"{var}^{{{power}}}")
        if power and c == 1:
            body = base
        elif power and _is_compound(c) and isinstance(c, LambdaRatFunc) and _term_count(c.num) > 1 and c.den.is_one():
            body = rf"\left({scalar_latex(c)}\right) {base}"
        else:
            body = f"{scalar_latex(c)} {base}".rstrip()
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return ''.join(pieces)


def series_latex(s):
    pieces = []
    for k in range(s.precision):
        c = s.ordinary(k)
        if s.field.is_zero(c):
            continue
        base = '' if k == 0 else ('t' if k == 1 else f"t^{{{k}}}")
        body = base if k and c == 1 else f"{scalar_latex(c)} {base}".rstrip()
        pieces.append(body)
    pieces.append(f"O(t^{{{s.precision}}})")
    return ' + '.join(pieces)


# Reports

def _params_plain(params):
    if not params:
        return ''
    return ' (' + ', '.join(f"{k}={v}" for k, v in sorted(params.items())) + ')'


def _degree_plain(d):
    if d.passed:
        return f"  n={d.n} pass"
    m = d.first_mismatch
    return (
        f"  n={d.n} fail at x^{m.x_power} in step {m.step}: "
        f"lhs {scalar_plain(m.lhs)}, rhs {scalar_plain(m.rhs)}"
    )


def report_plain(report):
    verdict = 'pass' if report.passed else 'fail'
    lines = [f"{report.id}{_params_plain(report.params)}: {verdict}"]
    lines.extend(_degree_plain(d) for d in report.per_degree)
    if report.variant_note is not None:
        lines.append(f"  variants: {report.variant_note}")
    for check in report.spot_checks:
        if check.disagreements:
            where = ', '.join(f"n={n} {step}" for n, step in check.disagreements)
            lines.append(f"  spot check at lambda={_rational(check.value)} disagrees: {where}")
    return '\n'.join(lines)


def report_latex(report):
    rows = [r'\begin{tabular}{rl}', rf'\multicolumn{{2}}{{l}}{{\texttt{{{report.id}}}}} \\']
    for d in report.per_degree:
        if d.passed:
            rows.append(rf'{d.n} & pass \\')
        else:
            m = d.first_mismatch
            rows.append(
                rf'{d.n} & fail at $x^{{{m.x_power}}}$: ${scalar_latex(m.lhs)} \ne {scalar_latex(m.rhs)}$ \\'
            )
    rows.append(r'\end{tabular}')
    return '\n'.join(rows)
