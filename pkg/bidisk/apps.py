from django.apps import AppConfig as DjangoAppConfig
from django.core import checks

from .checks import check_settings


class AppConfig(DjangoAppConfig):
    name = "bidisk"
    verbose_name = "Bidisk"

    def ready(self):
        checks.register(check_settings)
