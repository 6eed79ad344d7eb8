"""
Verification ledger helpers.

Usage:
    from identities.utils import record_report

    report = verify(IdentityId.THM1, 8)
    record_report(report)
"""
import logging

from .models import VerificationRun

logger = logging.getLogger(__name__)


def record_report(report):
    """
    Store one report as a VerificationRun row.

    Args:
        report: IdentityReport

    Returns:
        VerificationRun: the created row
    """
    n_max = max((d.n for d in report.per_degree), default=0)
    run = VerificationRun.objects.create(
        identity=str(report.id),
        n_max=n_max,
        params=dict(report.params),
        passed=report.passed,
        failed_degrees=report.failed_degrees,
        variant_note=report.variant_note or '',
        report=report.to_json(),
    )
    logger.debug(f"recorded {report.id} as verification run {run.pk}")
    return run

