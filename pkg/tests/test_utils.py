# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
tests.test_utils
~~~~~~~~~~~~~~~~

Provides unit tests for reports and structured logging.
"""

import logging

from fractions import Fraction
from io import StringIO
from json import loads

import nose.tools as nt

from pygogo import utils as gogo_utils

from pcross.linalg import GF
from pcross.utils import CustomEncoder, Report, StructuredAdapter
from pcross.utils import StructuredMessage

from . import BaseTest


class TestStructured(BaseTest):
    def test_exact_scalars(self):
        s = StringIO()
        base = logging.getLogger("pcross.findings.test_utils")
        base.addHandler(logging.StreamHandler(s))
        base.setLevel(logging.INFO)
        base.propagate = False
        structured = StructuredAdapter(base, {"suite": "maschke"})
        nt.assert_is_instance(structured, gogo_utils.StructuredAdapter)

        extra = {"ratio": Fraction(2, 3), "residue": GF(3)(5)}
        structured.info("finding", extra=extra)
        expected = {
            "suite": "maschke",
            "message": "finding",
            "ratio": "2/3",
            "residue": str(GF(3)(5)),
        }
        nt.assert_equal(expected, loads(s.getvalue()))

    def test_message(self):
        msg = StructuredMessage("trial", witness={"g": 1, "c": Fraction(-1, 2)})
        nt.assert_is_instance(msg, gogo_utils.StructuredMessage)
        text = '{"message": "trial", "witness": {"c": "-1/2", "g": 1}}'
        nt.assert_equal(text, str(msg))


class TestReport(BaseTest):
    def test_lines(self):
        report = Report("action")
        nt.assert_true(report.check(True, "unit", "unit preserved"))
        nt.assert_false(report.check(False, "unit", "1_g missed", g="g"))
        report.note("checked on ideal bases")
        lines = [
            "action: FAILED",
            "  [unit] 1_g missed",
            '    witness: {"g": "g"}',
            "  note: checked on ideal bases",
        ]
        nt.assert_equal(lines, report.lines())
        nt.assert_equal('["1/3"]', CustomEncoder().encode([Fraction(1, 3)]))
