from ...linalg import RowIndex, first_row_cofactors, last_row_cofactors
from ...reports import Report
from ._base import BidiskCommand, nonneg_int


class Command(BidiskCommand):
    help = "Prints the first or last cofactor row of the Gram matrix A^n."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--n", type=nonneg_int, required=True)
        parser.add_argument(
            "--row", choices=[r.value for r in RowIndex], default=RowIndex.LAST.value
        )

    def run(self, **options):
        symbol = self.get_symbol(options)
        row_index = RowIndex(options["row"])
        compute = first_row_cofactors if row_index is RowIndex.FIRST else last_row_cofactors
        row = compute(symbol, options["n"])
        report = Report(("n", "row", "j", "value"))
        for j, value in enumerate(row):
            report.add(row.n, row.row, j, value)
        self.emit(report, options)
