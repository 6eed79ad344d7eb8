from django.apps import AppConfig


class PolyopConfig(AppConfig):
    name = 'polyop'
    verbose_name = 'Polynomials and series operators'
