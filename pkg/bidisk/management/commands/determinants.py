from ...linalg import det_sequence
from ...reports import Report
from ._base import BidiskCommand, nonneg_int


class Command(BidiskCommand):
    help = "Lists the leading minors D_0..D_n_max of the Gram matrices."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--n-max", type=nonneg_int, default=10)

    def run(self, **options):
        symbol = self.get_symbol(options)
        report = Report(("n", "numerator", "denominator"))
        for n, value in enumerate(det_sequence(symbol, options["n_max"])):
            report.add(n, value.numerator, value.denominator)
        self.emit(report, options)
