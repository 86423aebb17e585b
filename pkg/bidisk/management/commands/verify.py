import json

from django.core.management.base import CommandError

from ...verification import DEFAULT_RANGES, QUICK_RANGES, SUITE_NAMES, run_suite
from ._base import VERIFICATION_FAILED, BidiskCommand, nonneg_int


class Command(BidiskCommand):
    help = "Runs the property suites and reports each property as JSON."

    uses_target = False
    uses_format = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--suite", choices=("all",) + SUITE_NAMES, default="all")
        parser.add_argument(
            "--k-max",
            type=nonneg_int,
            default=None,
            help="Largest k of the monotonicity certificate (default 500).",
        )
        parser.add_argument(
            "--quick", action="store_true", help="Use reduced sweep ranges."
        )

    def run(self, **options):
        ranges = QUICK_RANGES if options["quick"] else DEFAULT_RANGES
        results = run_suite(options["suite"], ranges, k_max=options["k_max"])
        failed = [result for result in results if not result.passed]
        for result in results:
            line = f"[{result.status.value}] {result.suite}: {result.property}"
            if result.counterexample:
                line += f" ({result.counterexample})"
            self.stderr.write(line)
        payload = {
            "suite": options["suite"],
            "passed": not failed,
            "results": [result.as_dict() for result in results],
        }
        self.write_text(json.dumps(payload, indent=2) + "\n", options)
        if failed:
            names = ", ".join(result.property for result in failed)
            raise CommandError(f"Failed properties: {names}", returncode=VERIFICATION_FAILED)
