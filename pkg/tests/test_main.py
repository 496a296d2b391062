# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
tests.test_main
~~~~~~~~~~~~~~~

Provides unit tests for the command line interface.
"""

import sys

from io import StringIO
from os import path as p
from tempfile import TemporaryDirectory

import nose.tools as nt
import pygogo as gogo

from pcross import formats
from pcross.main import execute
from pcross.utils import set_verbosity

from . import BaseTest, get_path

module_logger = gogo.Gogo(__name__).logger


def setup_module():
    """site initialization"""
    global initialized
    initialized = True
    module_logger.debug("Main module setup\n")


class TestMain(BaseTest):
    """Main unit tests"""

    def setUp(self):
        self.stdout, self.stderr = sys.stdout, sys.stderr
        sys.stdout, sys.stderr = StringIO(), StringIO()

    def tearDown(self):
        set_verbosity(False)
        sys.stdout, sys.stderr = self.stdout, self.stderr

    def run_command(self, *argv):
        return execute([get_path(a) if a.endswith(".json") else a for a in argv])

    def test_usage(self):
        nt.assert_equal(0, execute(["--version"]))
        nt.assert_in("pcross v", sys.stdout.getvalue())
        nt.assert_equal(2, execute([]))
        nt.assert_equal(2, execute(["frobnicate"]))
        nt.assert_equal(2, execute(["lab", "perfect"]))
        nt.assert_equal(2, execute(["lab", "artinian", "--trials", "0"]))

    def test_validate(self):
        nt.assert_equal(0, self.run_command("validate", "z-transfer.json"))
        output = sys.stdout.getvalue()
        nt.assert_in("finite type: no\n", output)
        nt.assert_in("  witness: g = 3\n", output)

        nt.assert_equal(0, self.run_command("-V", "validate", "c3-restriction.json"))
        nt.assert_equal(1, self.run_command("validate", "truncated-restriction.json"))
        nt.assert_equal(1, self.run_command("validate", "broken-latin.json"))

    def test_parse_errors(self):
        nt.assert_equal(3, self.run_command("validate", "empty.json"))
        nt.assert_in("parse error: line 1", sys.stderr.getvalue())
        nt.assert_equal(3, self.run_command("build", "missing.json"))

    def test_build(self):
        nt.assert_equal(0, self.run_command("build", "z-transfer.json"))
        output = sys.stdout.getvalue()
        nt.assert_in("dimension: 4\n", output)
        nt.assert_in("unit: e1*d[0] + e2*d[0]\n", output)
        nt.assert_in("support: -1, 0, 1\n", output)
        nt.assert_equal(1, self.run_command("build", "m2.json"))

        nt.assert_equal(1, self.run_command("build", "broken-scaling.json"))
        nt.assert_in("action: FAILED\n", sys.stdout.getvalue())
        nt.assert_equal(1, self.run_command("validate", "broken-scaling.json"))

        with TemporaryDirectory() as dirname:
            path = p.join(dirname, "crossed.json")
            args = ("build", "broken-scaling.json", "-o", path)
            nt.assert_equal(1, self.run_command(*args))
            nt.assert_false(p.exists(path))

        with TemporaryDirectory() as dirname:
            path = p.join(dirname, "crossed.json")
            args = ("build", "c3-restriction.json", "-o", path)
            nt.assert_equal(0, self.run_command(*args))
            nt.assert_equal(4, formats.load(path).algebra.dim)
            nt.assert_equal(0, execute(["validate", path]))

    def test_analyze(self):
        nt.assert_equal(0, self.run_command("analyze", "m2.json"))
        output = sys.stdout.getvalue()
        nt.assert_in("radical: dimension 0\n", output)
        nt.assert_in("frobenius: trace form (1, 0, 0, 1) via candidate\n", output)

        args = ("analyze", "--fixed-ring", "--crossed", "z-transfer.json")
        nt.assert_equal(0, self.run_command(*args))
        args = ("analyze", "--radical", "dual-numbers.json")
        nt.assert_equal(0, self.run_command(*args))

    def test_globalize(self):
        nt.assert_equal(0, self.run_command("globalize", "c3-restriction.json"))
        nt.assert_in("enveloping algebra: dimension 3\n", sys.stdout.getvalue())
        nt.assert_equal(1, self.run_command("globalize", "truncated-restriction.json"))
        nt.assert_equal(1, self.run_command("globalize", "z-transfer.json"))

    def test_triangular(self):
        nt.assert_equal(0, self.run_command("triangular", "sign-triangular.json"))
        nt.assert_equal(1, self.run_command("triangular", "z-transfer.json"))

    def test_lab(self):
        nt.assert_equal(0, execute(["lab", "artinian", "--trials", "2"]))
        nt.assert_equal(0, execute(["lab", "triangular", "--trials", "2", "-s", "4"]))
