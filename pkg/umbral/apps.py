from django.apps import AppConfig


class UmbralConfig(AppConfig):
    name = 'umbral'
    verbose_name = 'Umbral calculus'
