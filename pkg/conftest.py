import os

import django


def pytest_configure(config):
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "bidisk.tests.test_settings")
    django.setup()
