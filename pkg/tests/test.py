#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
tests.test
~~~~~~~~~~

Provides scripttests for the pcross CLI.
"""

import sys

from difflib import unified_diff
from os import path as p
from io import StringIO
from timeit import default_timer as timer

import pygogo as gogo

from scripttest import TestFileEnvironment

sys.path.append(p.abspath(p.dirname(p.dirname(__file__))))
import pcross  # noqa


def main(script, tests, verbose=False, stop=True):
    """ Main method

    Each test is (options, arguments, expected output, expected return code).

    Returns 0 on success, 1 on failure
    """
    failures = 0
    logger = gogo.Gogo(__name__, verbose=verbose).logger
    short_script = p.basename(script)
    env = TestFileEnvironment(".scripttest")

    start = timer()

    for pos, test in enumerate(tests):
        num = pos + 1
        opts, arguments, expected, code = test
        joined_opts = " ".join(opts) if opts else ""
        joined_args = '"%s"' % '" "'.join(arguments) if arguments else ""
        command = "%s %s %s" % (script, joined_opts, joined_args)
        short_command = "%s %s %s" % (short_script, joined_opts, joined_args)
        kwargs = {"expect_error": bool(code), "expect_stderr": True}
        cwd = p.abspath(p.dirname(p.dirname(__file__)))
        result = env.run(command, cwd=cwd, **kwargs)
        output = result.stdout

        if isinstance(expected, bool):
            text = StringIO(output).read()
            outlines = [str(bool(text))]
            checklines = StringIO(str(expected)).readlines()
        elif p.isfile(expected):
            outlines = StringIO(output).readlines()

            with open(expected, encoding="utf-8") as f:
                checklines = f.readlines()
        else:
            outlines = StringIO(output).readlines()
            checklines = StringIO(expected).readlines()

        args = [checklines, outlines]
        kwargs = {"fromfile": "expected", "tofile": "got"}
        diffs = "".join(unified_diff(*args, **kwargs))
        passed = not diffs and result.returncode == code

        if not passed:
            failures += 1
            msg = "ERROR! Output from test #%i:\n  %s\n" % (num, short_command)
            msg += "doesn't match:\n  %s\n" % expected
            msg += "exit code %i (expected %i)\n" % (result.returncode, code)
            msg += diffs if diffs else ""
        else:
            logger.debug(output)
            msg = "Scripttest #%i: %s ... ok" % (num, short_command)

        logger.info(msg)

        if stop and failures:
            break

    time = timer() - start
    logger.info("%s" % "-" * 70)
    end = "FAILED (failures=%i)" % failures if failures else "OK"
    logger.info("Ran %i scripttests in %0.3fs\n\n%s" % (num, time, end))
    sys.exit(failures)


if __name__ == "__main__":
    parent_dir = p.abspath(p.dirname(p.dirname(__file__)))
    script = p.join(parent_dir, "bin", "pcross")
    validated = "".join(
        [
            "algebra: ok\n",
            "action: ok\n",
            "finite type: no\n",
            "  witness: g = 3\n",
        ]
    )
    built = "dimension: 4\nunit: e1*d[0] + e2*d[0]\nsupport: -1, 0, 1\n"

    tests = [
        (["--help"], [], True, 0),
        (["--version"], [], "pcross v%s\n" % pcross.__version__, 0),
        (["validate"], ["data/z-transfer.json"], validated, 0),
        (["build"], ["data/z-transfer.json"], built, 0),
        (["validate"], ["data/truncated-restriction.json"], True, 1),
        (["build"], ["data/broken-scaling.json"], True, 1),
        (["validate"], ["data/empty.json"], "", 3),
        (["globalize"], ["data/c3-restriction.json"], True, 0),
        (["triangular"], ["data/sign-triangular.json"], True, 0),
        (["lab artinian -t 2"], [], True, 0),
        (["lab perfect"], [], "", 2),
    ]

    main(script, tests)
