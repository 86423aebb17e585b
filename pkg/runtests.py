#!/usr/bin/env python
# -*- coding: utf-8 -*-
import os
import sys

import django

if __name__ == "__main__":
    os.environ["DJANGO_SETTINGS_MODULE"] = "bidisk.tests.test_settings"
    django.setup()
    from django.test.runner import DiscoverRunner

    tags = [t.split("=")[1] for t in sys.argv if t.startswith("--tag")]
    exclude_tags = [t.split("=")[1] for t in sys.argv if t.startswith("--exclude-tag")]
    failfast = any([True for t in sys.argv if t.startswith("--failfast")])
    opts = dict(failfast=failfast, tags=tags, exclude_tags=exclude_tags)
    failures = DiscoverRunner(**opts).run_tests(["bidisk.tests.tests"])
    sys.exit(failures)
