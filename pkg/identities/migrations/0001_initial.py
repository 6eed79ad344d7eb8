# Generated by Django 6.0 on 2026-10-19 09:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='VerificationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('timestamp', models.DateTimeField(auto_now_add=True, db_index=True, verbose_name='Run at')),
                ('identity', models.CharField(choices=[('THM1', 'Theorem 1: associated sequence of (1-lambda)t/(e^t-lambda)'), ('EQ18', 'Mittag-Leffler sequence from Daehee polynomials'), ('EQ20', 'Transfer chain for the Theorem 1 sequence'), ('EQ21_24_CHAIN', 'Mittag-Leffler sequence through Bernoulli and Frobenius-Euler polynomials'), ('THM2_EQ26', 'Theorem 2: Daehee polynomials by the Pincherle derivative'), ('EQ28', 'Associated sequence of t/(e^t+1)'), ('EQ29', 'Mittag-Leffler sequence as a sum of shifted Bernoulli polynomials'), ('EQ30', 'Daehee polynomials as a sum of shifted Bernoulli polynomials'), ('EQ31', 'Daehee polynomials in the falling factorial basis'), ('THM3_EQ36', 'Theorem 3: Changhee polynomials of order a'), ('THM4_EQ38', 'Theorem 4: x H_{n-1}^{(an)}(x|lambda) as an associated sequence'), ('EQ39', 'x B_{n-1}^{(bn)}(x) as an associated sequence'), ('EQ40_41', 'Frobenius-Euler polynomials from Bernoulli polynomials by transfer'), ('THM5', 'Theorem 5: shifted Frobenius-Euler sum against a Stirling sum'), ('REMARK45', 'Sheffer sequence for ((1-lambda)/(e^t-lambda), t(1-lambda)/(e^t-lambda))'), ('THM6_EQ49', 'Theorem 6: lambda-analogue of the Mittag-Leffler sequence'), ('EQ50', 'lambda-Mittag-Leffler sequence as a double sum'), ('EQ51', 'Daehee polynomials of the second kind'), ('EQ53_TSTAR', 'Associated sequence of 2t/(1+t^2)'), ('EQ13_CONV', 'Binomial convolution for Sheffer sequences'), ('EQ9_MULTI', 'Multinomial expansion of a product pairing')], db_index=True, max_length=20, verbose_name='Identity')),
                ('n_max', models.PositiveIntegerField(verbose_name='Last degree')),
                ('params', models.JSONField(blank=True, default=dict, verbose_name='Parameters')),
                ('passed', models.BooleanField(verbose_name='Passed')),
                ('failed_degrees', models.JSONField(blank=True, default=list, verbose_name='Failed degrees')),
                ('variant_note', models.TextField(blank=True, verbose_name='Variant note')),
                ('report', models.JSONField(verbose_name='Report')),
            ],
            options={
                'verbose_name': 'Verification run',
                'verbose_name_plural': 'Verification runs',
                'ordering': ['-timestamp'],
                'indexes': [models.Index(fields=['identity', 'timestamp'], name='identities__identit_5c1e2a_idx'), models.Index(fields=['passed', 'timestamp'], name='identities__passed_8d3f41_idx')],
            },
        ),
    ]
