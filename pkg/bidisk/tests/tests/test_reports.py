import json
import sys
from fractions import Fraction

from django.test import SimpleTestCase

from bidisk.exceptions import DomainError
from bidisk.reports import Report, render, render_cell


class TestReports(SimpleTestCase):
    def setUp(self):
        self.report = Report(("k", "value", "float", "note"))
        self.report.add(0, Fraction(2, 3), 0.1, None)
        self.report.add(1, Fraction(-4), 1e-20, "x,y")

    def test_render_cell(self):
        self.assertEqual(render_cell(None), "")
        self.assertEqual(render_cell(Fraction(-2, 15)), "-2/15")
        self.assertEqual(render_cell(0.1), "0.1")

    def test_csv(self):
        self.assertEqual(
            render(self.report, "csv"),
            'k,value,float,note\n0,2/3,0.1,\n1,-4,1e-20,"x,y"\n',
        )

    def test_json(self):
        self.assertEqual(
            json.loads(render(self.report, "json")),
            [
                {"k": 0, "value": "2/3", "float": 0.1, "note": None},
                {"k": 1, "value": "-4", "float": 1e-20, "note": "x,y"},
            ],
        )

    def test_long_integers(self):
        report = Report(("n",))
        limit = sys.get_int_max_str_digits()
        report.add(10**5000)
        self.assertEqual(render(report), "n\n1" + "0" * 5000 + "\n")
        self.assertEqual(sys.get_int_max_str_digits(), limit)

    def test_errors(self):
        self.assertRaises(DomainError, self.report.add, 1, 2)
        self.assertRaises(DomainError, render, self.report, "xml")
