from ...invariants import invariant_table
from ...reports import Report
from ._base import BidiskCommand, nonneg_int

COLUMNS = (
    "k",
    "pi2_coeff",
    "const_coeff",
    "partial_sum",
    "tail_bound",
    "float_value",
    "asymptote",
    "residual_k3",
)


class Command(BidiskCommand):
    help = "Tabulates the invariants Sigma_k for k = 0..k_max."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--k-max", type=nonneg_int, default=3)
        parser.add_argument(
            "--truncation", type=nonneg_int, default=1000, help="Last n of the partial sums."
        )

    def run(self, **options):
        target = self.get_target(options)
        self.log("Tabulating Sigma_k for %s up to k=%s", target, options["k_max"])
        report = Report(COLUMNS)
        for row in invariant_table(target, options["k_max"], options["truncation"]):
            closed = row.closed
            report.add(
                row.k,
                closed.pi2_coeff if closed else None,
                closed.const_coeff if closed else None,
                row.partial,
                row.tail_bound,
                row.float_value,
                row.asymptote,
                row.residual_k3,
            )
        self.emit(report, options)
