from io import StringIO

from django.core.management import call_command


def run_command(name: str, *args, **options) -> tuple[str, str]:
    """Runs a management command and returns (stdout, stderr)."""
    stdout, stderr = StringIO(), StringIO()
    call_command(name, *args, stdout=stdout, stderr=stderr, **options)
    return stdout.getvalue(), stderr.getvalue()
