"""
Command line front end of the engine.

Usage:
    python manage.py umbra expand --family daehee --n 1
    python manage.py umbra series --name bernoulli --n 6
    python manage.py umbra verify --id THM1 --n-max 8 --format json
    python manage.py umbra verify-all --n-max 6 --record
    python manage.py umbra pair --family changhee --order 2 --n 4
    python manage.py umbra --batch jobs.jsonl

Exit codes: 0 success, 1 an identity verdict failed (output is still
written), 2 usage or input error.
"""
from django.core.management.base import BaseCommand, CommandError

from coefficients.exceptions import UmbraError
from core.jobs import EXIT_FAILED, EXIT_USAGE, JobCommand, JobSpec, execute, parse_lambda, run_batch
from core.rendering import OutputFormat

# flags each subcommand accepts
SUBCOMMAND_FLAGS = {
    JobCommand.EXPAND: ('family', 'order', 'a', 'n', 'lambda'),
    JobCommand.SERIES: ('name', 'n', 'lambda'),
    JobCommand.VERIFY: ('id', 'n_max', 'a', 'b', 'lambda', 'record'),
    JobCommand.VERIFY_ALL: ('n_max', 'lambda', 'record'),
    JobCommand.PAIR: ('family', 'order', 'a', 'n', 'lambda'),
}


def _add_flag(parser, flag):
    if flag == 'family':
        parser.add_argument('--family', help='Family name, e.g. daehee or bernoulli')
    elif flag == 'name':
        parser.add_argument('--name', help='Named series, e.g. exp or tstar-f')
    elif flag == 'id':
        parser.add_argument('--id', dest='identity', help='Identity id, e.g. THM1')
    elif flag == 'n':
        parser.add_argument('--n', type=int, help='Degree (expand, pair) or precision (series)')
    elif flag == 'n_max':
        parser.add_argument('--n-max', type=int, dest='n_max', help='Last degree to check (default 8)')
    elif flag == 'lambda':
        parser.add_argument(
            '--lambda', dest='lambda_value',
            help='Rational value of lambda (not 1) to specialize output or spot-check at',
        )
    elif flag == 'record':
        parser.add_argument('--record', action='store_true', help='Store reports in the verification ledger')
    else:
        parser.add_argument(f"--{flag}", type=int, help=f"Integer parameter {flag}")


class Command(BaseCommand):
    help = 'Compute umbral families and series, and verify identities exactly'

    def add_arguments(self, parser):
        parser.add_argument('--batch', help='JSON-lines file of jobs, one output line per job')
        subparsers = parser.add_subparsers(dest='command')
        for command, flags in SUBCOMMAND_FLAGS.items():
            sub = subparsers.add_parser(command.value, help=command.label)
            for flag in flags:
                _add_flag(sub, flag)
            sub.add_argument(
                '--format',
                choices=OutputFormat.values,
                default=OutputFormat.PLAIN,
                help='Output format (default plain)',
            )

    def handle(self, *args, **options):
        if options.get('batch'):
            if options.get('command'):
                raise CommandError('--batch cannot be combined with a subcommand', returncode=EXIT_USAGE)
            return self._handle_batch(options['batch'])
        if not options.get('command'):
            raise CommandError(
                f"choose a subcommand: {', '.join(JobCommand.values)}, or --batch FILE",
                returncode=EXIT_USAGE,
            )

        try:
            spec = JobSpec(
                command=options['command'],
                family=options.get('family'),
                identity=options.get('identity'),
                name=options.get('name'),
                n=options.get('n'),
                n_max=options.get('n_max'),
                order=options.get('order'),
                a=options.get('a'),
                b=options.get('b'),
                lambda_value=parse_lambda(options.get('lambda_value')),
                format=options['format'],
                record=options.get('record', False),
            )
            result = execute(spec)
        except UmbraError as e:
            raise CommandError(str(e), returncode=EXIT_USAGE)

        self.stdout.write(result.output)
        if result.exit_code == EXIT_FAILED:
            raise CommandError(f"{spec.command.value}: a verdict failed", returncode=EXIT_FAILED)

    def _handle_batch(self, path):
        try:
            with open(path, encoding='utf-8') as fh:
                lines = fh.read().splitlines()
        except OSError as e:
            raise CommandError(f"cannot read batch file {path}: {e.strerror}", returncode=EXIT_USAGE)
        except UnicodeDecodeError as e:
            raise CommandError(f"batch file {path} is not UTF-8: {e.reason}", returncode=EXIT_USAGE)

        try:
            exit_code, out = run_batch(lines)
        except UmbraError as e:
            raise CommandError(str(e), returncode=EXIT_USAGE)

        for line in out:
            self.stdout.write(line)
        if exit_code:
            raise CommandError(f"batch finished with exit code {exit_code}", returncode=exit_code)
