from __future__ import annotations

import argparse
import logging
import sys

from django.core.management.base import BaseCommand, CommandError

from ...exceptions import (
    BidiskError,
    DimensionMismatchError,
    DomainError,
    IndexOutOfRangeError,
    SingularGramError,
    SymbolParseError,
)
from ...reports import FORMATS, Report, render
from ...symbols import HomogeneousSymbol, Submodule, parse_symbol

PARSE_ERROR = 2
SINGULAR_GRAM = 3
VERIFICATION_FAILED = 1

INPUT_ERRORS = (SymbolParseError, DomainError, DimensionMismatchError, IndexOutOfRangeError)

_handler: logging.Handler | None = None


def nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


class BidiskCommand(BaseCommand):
    """Shared options, logging and exit codes for the table commands."""

    uses_target = True
    uses_format = True

    def add_arguments(self, parser):
        if self.uses_target:
            target = parser.add_mutually_exclusive_group()
            target.add_argument(
                "--submodule", choices=[s.value for s in Submodule], help="Named submodule."
            )
            target.add_argument(
                "--symbol", help='Homogeneous generator as "c_0,c_1,...,c_k" (ascending in z).'
            )
        if self.uses_format:
            parser.add_argument("--format", choices=FORMATS, default="csv")
        parser.add_argument("--out", help="Write the report to this path instead of stdout.")

    def handle(self, **options):
        self.setup_logging(verbosity=options.get("verbosity", 1))
        try:
            return self.run(**options)
        except SingularGramError as e:
            raise CommandError(str(e), returncode=SINGULAR_GRAM)
        except INPUT_ERRORS as e:
            raise CommandError(str(e), returncode=PARSE_ERROR)
        except BidiskError as e:
            # failed internal identities count as failed verification
            raise CommandError(str(e), returncode=VERIFICATION_FAILED)

    def run(self, **options):
        raise NotImplementedError

    def setup_logging(self, verbosity):
        global _handler
        self.verbosity = int(verbosity)
        self.logger = logging.getLogger("bidisk")
        if _handler is None:
            _handler = logging.StreamHandler(sys.stderr)
            _handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
            self.logger.addHandler(_handler)
        if self.verbosity < 2:
            self.logger.setLevel(logging.WARNING)
        elif self.verbosity == 2:
            self.logger.setLevel(logging.INFO)
        else:
            self.logger.setLevel(logging.DEBUG)

    def log(self, msg, *args):
        self.logger.info(msg, *args)

    def get_target(self, options) -> Submodule | HomogeneousSymbol:
        if symbol := options.get("symbol"):
            return parse_symbol(symbol)
        if submodule := options.get("submodule"):
            return Submodule(submodule)
        raise CommandError("Pass --submodule or --symbol.", returncode=PARSE_ERROR)

    def get_symbol(self, options) -> HomogeneousSymbol:
        target = self.get_target(options)
        return target.symbol if isinstance(target, Submodule) else target

    def emit(self, report: Report, options) -> None:
        self.write_text(render(report, options.get("format") or "csv"), options)

    def write_text(self, text: str, options) -> None:
        if out := options.get("out"):
            with open(out, "w", encoding="utf-8", newline="") as f:
                f.write(text)
            self.log("Wrote %s rows to %s", text.count("\n"), out)
        else:
            self.stdout.write(text, ending="")
