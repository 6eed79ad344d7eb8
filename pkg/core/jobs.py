"""
Jobs run by the umbra command, one at a time or from a JSON-lines batch file.

A JobSpec is built from command line options or from one batch record and
executed into a JobResult: an exit code (0 success, 1 an identity verdict
failed, 2 usage or input error), the rendered text and the JSON document.

Usage:
    from core.jobs import JobSpec, execute, run_batch

    result = execute(JobSpec.from_record({'command': 'expand', 'family': 'daehee', 'n': 1}))
    result.output    # 2*x + 2/(1-lambda)
"""
import json
import logging
from dataclasses import dataclass
from fractions import Fraction

from django.conf import settings
from django.db import models

from coefficients.exceptions import ExcludedLambda, UmbraError
from coefficients.fields import scalar_to_json
from families.catalog import FamilyId, family_sequence
from identities.registry import verify, verify_all
from identities.utils import record_report
from series.library import named_series
from umbral.sheffer import verify_duality

from . import rendering
from .rendering import OutputFormat

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class JobCommand(models.TextChoices):
    EXPAND = 'expand', 'Polynomial of a family'
    SERIES = 'series', 'Named generating series'
    VERIFY = 'verify', 'Check one identity'
    VERIFY_ALL = 'verify-all', 'Check every identity'
    PAIR = 'pair', 'Sheffer pair of a family'


class MalformedJob(UmbraError, ValueError):
    pass


INT_FIELDS = ('n', 'n_max', 'order', 'a', 'b')
TEXT_FIELDS = ('command', 'family', 'id', 'name', 'format')
RECORD_FIELDS = set(INT_FIELDS) | set(TEXT_FIELDS) | {'lambda', 'record'}


def parse_lambda(value):
    """Exact rational from an int or a string like -1, 1/2 or 0.25; 1 is excluded."""
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise MalformedJob(f"lambda must be a rational number, got {value!r}")
    try:
        v = Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise MalformedJob(f"lambda must be a rational number, got {value!r}")
    if v == 1:
        raise ExcludedLambda('lambda must differ from 1')
    return v


@dataclass(frozen=True)
class JobSpec:
    command: JobCommand
    family: str = None
    identity: str = None
    name: str = None
    n: int = None
    n_max: int = None
    order: int = None
    a: int = None
    b: int = None
    lambda_value: Fraction = None
    format: OutputFormat = OutputFormat.PLAIN
    record: bool = False

    def __post_init__(self):
        try:
            object.__setattr__(self, 'command', JobCommand(self.command))
        except ValueError:
            raise MalformedJob(f"unknown command: {self.command}")
        try:
            object.__setattr__(self, 'format', OutputFormat(self.format))
        except ValueError:
            raise MalformedJob(f"unknown format: {self.format}")
        needs = {
            JobCommand.EXPAND: ('family', 'n'),
            JobCommand.SERIES: ('name', 'n'),
            JobCommand.VERIFY: ('identity',),
            JobCommand.VERIFY_ALL: (),
            JobCommand.PAIR: ('family',),
        }[self.command]
        for attr in needs:
            if getattr(self, attr) is None:
                flag = 'id' if attr == 'identity' else attr
                raise MalformedJob(f"{self.command.value} needs --{flag.replace('_', '-')}")
        if self.n is not None and self.n < 0:
            raise MalformedJob('n must be >= 0')
        if self.command == JobCommand.SERIES and self.n < 1:
            raise MalformedJob('series precision n must be >= 1')

    @classmethod
    def from_record(cls, doc, default_format=OutputFormat.PLAIN):
        """JobSpec from one batch record; flag names without dashes, n-max as n_max."""
        if not isinstance(doc, dict):
            raise MalformedJob('record must be a JSON object')
        unknown = sorted(set(doc) - RECORD_FIELDS)
        if unknown:
            raise MalformedJob(f"unknown keys: {', '.join(unknown)}")
        if 'command' not in doc:
            raise MalformedJob('record needs a command')
        for key in INT_FIELDS:
            value = doc.get(key)
            if value is not None and (isinstance(value, bool) or not isinstance(value, int)):
                raise MalformedJob(f"{key} must be an integer, got {value!r}")
        for key in TEXT_FIELDS:
            value = doc.get(key)
            if value is not None and not isinstance(value, str):
                raise MalformedJob(f"{key} must be a string, got {value!r}")
        return cls(
            command=doc['command'],
            family=doc.get('family'),
            identity=doc.get('id'),
            name=doc.get('name'),
            n=doc.get('n'),
            n_max=doc.get('n_max'),
            order=doc.get('order'),
            a=doc.get('a'),
            b=doc.get('b'),
            lambda_value=parse_lambda(doc.get('lambda')),
            format=doc.get('format', default_format),
            record=bool(doc.get('record', False)),
        )

    @property
    def family_id(self):
        order = self.order if self.order is not None else self.a
        return FamilyId(self.family, order)

    @property
    def params(self):
        return {k: v for k, v in (('a', self.a), ('b', self.b)) if v is not None}

    @property
    def verify_n_max(self):
        if self.n_max is not None:
            return self.n_max
        return getattr(settings, 'UMBRA_DEFAULT_N_MAX', 8)


@dataclass(frozen=True)
class JobResult:
    exit_code: int
    output: str
    document: object


def _render(spec, plain, document, latex):
    if spec.format == OutputFormat.JSON:
        return rendering.dumps(document)
    if spec.format == OutputFormat.LATEX:
        return latex
    return plain


def _specialize(spec, item):
    return item if spec.lambda_value is None else item.specialize(spec.lambda_value)


def _lambda_json(spec):
    return None if spec.lambda_value is None else scalar_to_json(spec.lambda_value)


def _expand(spec):
    fid = spec.family_id
    p = _specialize(spec, family_sequence(fid, spec.n)[spec.n])
    doc = {'family': str(fid), 'n': spec.n, 'lambda': _lambda_json(spec), 'poly': rendering.poly_json(p)}
    return JobResult(EXIT_OK, _render(spec, rendering.poly_plain(p), doc, rendering.poly_latex(p)), doc)


def _series(spec):
    s, description = named_series(spec.name, spec.n)
    s = _specialize(spec, s)
    doc = {
        'name': spec.name,
        'description': description,
        'lambda': _lambda_json(spec),
        'series': rendering.series_json(s),
    }
    plain = f"{spec.name} = {description}\n{rendering.series_plain(s)}"
    return JobResult(EXIT_OK, _render(spec, plain, doc, rendering.series_latex(s)), doc)


def _spot_values(spec):
    return None if spec.lambda_value is None else (spec.lambda_value,)


def _verify(spec):
    report = verify(spec.identity, spec.verify_n_max, spec.params, spot_values=_spot_values(spec))
    if spec.record:
        record_report(report)
    doc = report.to_json()
    code = EXIT_OK if report.passed else EXIT_FAILED
    return JobResult(code, _render(spec, rendering.report_plain(report), doc, rendering.report_latex(report)), doc)


def _verify_all(spec):
    if spec.identity is not None or spec.params:
        raise MalformedJob('verify-all takes no --id, --a or --b')
    reports = verify_all(spec.verify_n_max, spot_values=_spot_values(spec))
    if spec.record:
        for report in reports:
            record_report(report)
    doc = {'n_max': spec.verify_n_max, 'reports': [r.to_json() for r in reports]}
    plain = '\n'.join(rendering.report_plain(r) for r in reports)
    latex = '\n\n'.join(rendering.report_latex(r) for r in reports)
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED
    return JobResult(code, _render(spec, plain, doc, latex), doc)


def _pair(spec):
    fid = spec.family_id
    n_max = spec.n if spec.n is not None else spec.verify_n_max
    seq = family_sequence(fid, n_max)
    passed = verify_duality(seq.pair, seq)
    g = _specialize(spec, seq.pair.g.truncate(n_max + 1))
    f = _specialize(spec, seq.pair.f.truncate(n_max + 1))
    verdict = 'pass' if passed else 'fail'
    doc = {
        'family': str(fid),
        'n_max': n_max,
        'lambda': _lambda_json(spec),
        'g': rendering.series_json(g),
        'f': rendering.series_json(f),
        'duality': verdict,
    }
    plain = '\n'.join([
        f"g = {rendering.series_plain(g)}",
        f"f = {rendering.series_plain(f)}",
        f"duality to n = {n_max}: {verdict}",
    ])
    latex = '\n'.join([
        f"g(t) = {rendering.series_latex(g)}",
        f"f(t) = {rendering.series_latex(f)}",
    ])
    return JobResult(EXIT_OK if passed else EXIT_FAILED, _render(spec, plain, doc, latex), doc)


HANDLERS = {
    JobCommand.EXPAND: _expand,
    JobCommand.SERIES: _series,
    JobCommand.VERIFY: _verify,
    JobCommand.VERIFY_ALL: _verify_all,
    JobCommand.PAIR: _pair,
}


def execute(spec):
    """Run one job. Engine errors propagate as UmbraError."""
    logger.debug(f"running {spec.command.value} job")
    return HANDLERS[spec.command](spec)


def parse_batch(lines):
    """
    JobSpecs of a JSON-lines batch, blank lines skipped.

    Returns:
        list of (line number, JobSpec)

    Raises:
        MalformedJob naming the first bad line
    """
    jobs = []
    for number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            doc = json.loads(line)
        except json.JSONDecodeError as e:
            raise MalformedJob(f"line {number}: not valid JSON ({e.msg})")
        try:
            jobs.append((number, JobSpec.from_record(doc, default_format=OutputFormat.JSON)))
        except UmbraError as e:
            raise MalformedJob(f"line {number}: {e}")
    return jobs


def run_batch(lines):
    """
    Execute every job of a batch in order.

    Returns:
        tuple: (exit code, output lines); the exit code is the largest job code
    """
    jobs = parse_batch(lines)
    logger.info(f"batch of {len(jobs)} jobs")
    exit_code = EXIT_OK
    out = []
    for number, spec in jobs:
        try:
            result = execute(spec)
            code = result.exit_code
            payload = result.document if spec.format == OutputFormat.JSON else result.output
        except UmbraError as e:
            logger.error(f"batch line {number}: {spec.command.value} aborted: {e}")
            code, payload = EXIT_USAGE, {'error': str(e)}
        exit_code = max(exit_code, code)
        out.append(rendering.dumps({
            'line': number,
            'command': spec.command.value,
            'exit_code': code,
            'result': payload,
        }))
        logger.info(f"batch line {number}: {spec.command.value} exit {code}")
    return exit_code, out
