from django.apps import AppConfig


class CoefficientsConfig(AppConfig):
    name = 'coefficients'
    verbose_name = 'Exact scalars'
