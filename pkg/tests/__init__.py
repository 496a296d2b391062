# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
tests
~~~~~

Provides application unit tests
"""

import unittest
import re

from os import path as p

import pygogo as gogo

module_logger = gogo.Gogo(__name__).logger
initialized = False

PARENT_DIR = p.abspath(p.dirname(p.dirname(__file__)))
DATA_DIR = p.join(PARENT_DIR, "data")


def get_path(name):
    """The path of a sample instance file"""
    return p.join(DATA_DIR, name)


def setup_package():
    """sample data check"""
    global initialized
    initialized = True
    module_logger.debug("Package Setup\n")


def teardown_package():
    global initialized
    initialized = False
    module_logger.debug("Package Teardown\n")


class BaseTest(unittest.TestCase):
    def runTest(self, *args, **kwargs):
        pass

    def assertEqualEllipsis(self, expected, actual, marker="...", msg=None):
        """Checks whether actual is equal to expected while ignoring ellipsis
        content.

        # https://gist.github.com/harobed/5845674

        Args:
            expected (scalar): The expected value
            actual (scalar): The actual value

        Example:
            >>> BaseTest().assertEqualEllipsis('foo...bar', 'foo123bar')
        """
        if marker not in expected:
            self.assertEqual(expected, actual, msg)

        replaced = re.escape(expected).replace(re.escape(marker), "(.*?)")

        if re.match(replaced, actual, re.M | re.S) is None:
            self.assertMultiLineEqual(expected, actual, msg)

    def assertPassed(self, report):
        """Checks that a report has no failures, showing them otherwise

        Args:
            report (Report): The report

        Example:
            >>> from pcross.utils import Report
            >>> BaseTest().assertPassed(Report("empty"))
        """
        self.assertTrue(report.passed, "\n".join(report.lines()))

    def assertFailed(self, report, axiom):
        """Checks that a report failed on the given axiom

        Example:
            >>> from pcross.utils import Report
            >>> report = Report("group")
            >>> report.fail("identity", "no identity")
            >>> BaseTest().assertFailed(report, "identity")
        """
        self.assertFalse(report.passed)
        self.assertIn(axiom, report.axioms)
