"""Runs the bidisk management commands without a Django project.

    python -m bidisk invariants --submodule zw2 --k-max 3
"""
import os
import sys

import django
from django.conf import settings
from django.core.management import execute_from_command_line


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    if not settings.configured and not os.environ.get("DJANGO_SETTINGS_MODULE"):
        settings.configure(INSTALLED_APPS=["bidisk"])
    django.setup()
    execute_from_command_line(["bidisk", *argv])


if __name__ == "__main__":
    main()
