from ...invariants import core_eigenvalues
from ...reports import Report
from ._base import BidiskCommand, nonneg_int


class Command(BidiskCommand):
    help = "Lists the core-operator eigenvalues +-lambda_n for n = 1..n_max."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--n-max", type=nonneg_int, default=10)

    def run(self, **options):
        target = self.get_target(options)
        report = Report(("n", "lambda_sq", "lambda_float"))
        for row in core_eigenvalues(target, options["n_max"]):
            report.add(row.n, row.lambda_sq, row.lambda_float)
        self.emit(report, options)
