from django.db import models

from .registry import IdentityId


class VerificationRun(models.Model):
    """One verification report, kept as a ledger row."""

    timestamp = models.DateTimeField(auto_now_add=True, db_index=True, verbose_name='Run at')
    identity = models.CharField(
        max_length=20,
        choices=IdentityId.choices,
        db_index=True,
        verbose_name='Identity'
    )
    n_max = models.PositiveIntegerField(verbose_name='Last degree')
    params = models.JSONField(default=dict, blank=True, verbose_name='Parameters')
    passed = models.BooleanField(verbose_name='Passed')
    failed_degrees = models.JSONField(default=list, blank=True, verbose_name='Failed degrees')
    variant_note = models.TextField(blank=True, verbose_name='Variant note')
    report = models.JSONField(verbose_name='Report')

    class Meta:
        ordering = ['-timestamp']
        verbose_name = 'Verification run'
        verbose_name_plural = 'Verification runs'
        indexes = [
            models.Index(fields=['identity', 'timestamp'], name='identities__identit_5c1e2a_idx'),
            models.Index(fields=['passed', 'timestamp'], name='identities__passed_8d3f41_idx'),
        ]

    def __str__(self):
        verdict = 'pass' if self.passed else 'fail'
        return f"[{self.timestamp.strftime('%Y-%m-%d %H:%M')}] {self.identity} n <= {self.n_max}: {verdict}"
