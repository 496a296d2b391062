# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
pcross.utils
~~~~~~~~~~~~

Errors, validation reports and structured (exact) JSON logging helpers

Examples:
    basic usage::

        >>> from fractions import Fraction
        >>> CustomEncoder().encode([Fraction(1, 2), 3])
        '["1/2", 3]'

        >>> report = Report("demo")
        >>> report.check(1 + 1 == 2, "arith", "one plus one")
        True
        >>> report.passed
        True
"""

import logging

from fractions import Fraction
from json import JSONEncoder

import pygogo as gogo

from pygogo import utils as gogo_utils

QUIET_LEVEL = "warning"


def get_logger(name):
    """A module logger: warnings and errors to stderr, debug output only once
    :func:`set_verbosity` is switched on.

    Examples:
        >>> get_logger("pcross.doctest").debug("hidden")
    """
    return gogo.Gogo(name, low_level=QUIET_LEVEL, monolog=True).logger


def set_verbosity(verbose):
    """Turns debug output of every pcross module logger on or off"""
    level = logging.DEBUG if verbose else getattr(logging, QUIET_LEVEL.upper())

    for name, lggr in list(logging.root.manager.loggerDict.items()):
        if name.startswith("pcross") and isinstance(lggr, logging.Logger):
            lggr.setLevel(level)

            # the low pass (stdout) handler is added last
            if lggr.handlers:
                lggr.handlers[-1].setLevel(level)


logger = get_logger(__name__)


class PcrossError(ValueError):
    """Base error. Every error carries an optional `witness` dict.

    Examples:
        >>> err = PcrossError("bad", witness={"g": 1})
        >>> err.witness
        {'g': 1}
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness or {}


class MalformedInput(PcrossError):
    pass


class DimensionMismatch(PcrossError):
    pass


class UnsupportedField(PcrossError):
    pass


class ParentMismatch(PcrossError):
    pass


class NotAnIdeal(PcrossError):
    pass


class NotInvariant(PcrossError):
    pass


class NotASubgroup(PcrossError):
    pass


class HypothesisViolation(PcrossError):
    pass


class TwistedInput(PcrossError):
    pass


class InfiniteGroup(PcrossError):
    pass


class UnknownSuite(PcrossError):
    pass


class UnsupportedInstance(PcrossError):
    pass


class ParseError(PcrossError):
    """An instance file could not be read

    Args:
        message (str): What went wrong.

    Kwargs:
        line (int): The offending line (JSON syntax errors).
        path (str): The offending field path, e.g. `action.alpha.1`.

    Examples:
        >>> str(ParseError("expected a list", path="group.table"))
        'group.table: expected a list'
        >>> str(ParseError("Expecting value", line=1))
        'line 1: Expecting value'
    """

    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path

        if path:
            message = "%s: %s" % (path, message)
        elif line:
            message = "line %i: %s" % (line, message)

        super().__init__(message, witness={"line": line, "path": path})


class Report(object):
    """The outcome of a validator. Validators never raise on a failed axiom,
    they record it here together with a witness.

    Args:
        name (str): What was validated.

    Examples:
        >>> report = Report("algebra")
        >>> report.fail("assoc", "not associative", triple=(0, 1, 1))
        >>> report.passed
        False
        >>> report.failures[0]["witness"]
        {'triple': (0, 1, 1)}
        >>> report.axioms
        ['assoc']
    """

    def __init__(self, name):
        self.name = name
        self.failures = []
        self.notes = []

    def fail(self, axiom, message, **witness):
        failure = {"axiom": axiom, "message": message, "witness": witness}
        self.failures.append(failure)
        logger.debug("%s: [%s] %s", self.name, axiom, message)

    def check(self, condition, axiom, message, **witness):
        """Records a failure unless `condition` holds.

        Returns:
            bool: The condition
        """
        if not condition:
            self.fail(axiom, message, **witness)

        return bool(condition)

    def note(self, message):
        self.notes.append(message)

    def merge(self, other, prefix=None):
        """Folds another report's failures and notes into this one.

        Examples:
            >>> a, b = Report("a"), Report("b")
            >>> b.fail("x", "broken")
            >>> a.merge(b, prefix="group").failures[0]["axiom"]
            'group.x'
        """
        for failure in other.failures:
            failure = dict(failure)

            if prefix:
                failure["axiom"] = "%s.%s" % (prefix, failure["axiom"])

            self.failures.append(failure)

        self.notes.extend(other.notes)
        return self

    @property
    def passed(self):
        return not self.failures

    @property
    def axioms(self):
        return [f["axiom"] for f in self.failures]

    def first(self, axiom):
        """The first failure recorded for `axiom` (or None)"""
        return next((f for f in self.failures if f["axiom"] == axiom), None)

    def to_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "failures": self.failures,
            "notes": self.notes,
        }

    def lines(self):
        """Human readable report lines

        Examples:
            >>> report = Report("group")
            >>> report.fail("identity", "no identity")
            >>> report.lines()
            ['group: FAILED', '  [identity] no identity']
        """
        status = "ok" if self.passed else "FAILED"
        lines = ["%s: %s" % (self.name, status)]

        for failure in self.failures:
            lines.append("  [%s] %s" % (failure["axiom"], failure["message"]))

            if failure["witness"]:
                witness = CustomEncoder(sort_keys=True).encode(failure["witness"])
                lines.append("    witness: %s" % witness)

        lines.extend("  note: %s" % n for n in self.notes)
        return lines


class CustomEncoder(JSONEncoder):
    """A JSON encoder that keeps scalars exact. Rationals and prime field
    residues become strings ("p/q"), never floats.

    Examples:
        >>> CustomEncoder().encode(range(3))
        '[0, 1, 2]'
        >>> CustomEncoder().encode({"x": Fraction(2, 6)})
        '{"x": "1/3"}'
    """

    def default(self, obj):
        """Encodes a given object

        Args:
            obj (scalar): The object to encode.

        Returns:
            The encoded object

        Examples:
            >>> CustomEncoder().default(Fraction(4, 2))
            '2'
            >>> CustomEncoder().default({2, 1})
            [1, 2]
        """
        if isinstance(obj, Fraction) or hasattr(obj, "modulus"):
            encoded = str(obj)
        elif hasattr(obj, "to_dict"):
            encoded = obj.to_dict()
        elif hasattr(obj, "union"):
            encoded = sorted(obj, key=str)
        elif hasattr(obj, "__iter__"):
            encoded = list(obj)
        else:
            encoded = str(obj)

        return encoded


class StructuredMessage(gogo_utils.StructuredMessage):
    """A :class:`pygogo.utils.StructuredMessage` that keeps scalars exact

    Examples:
        >>> from json import loads

        >>> msg = StructuredMessage('finding', ratio=Fraction(1, 2))
        >>> loads(str(msg)) == {'message': 'finding', 'ratio': '1/2'}
        True
    """

    def __str__(self):
        return str(CustomEncoder(sort_keys=True).encode(self.kwargs))


class StructuredAdapter(gogo_utils.StructuredAdapter):
    """A :class:`pygogo.utils.StructuredAdapter` that logs exact scalars. Used
    for the line delimited findings stream.

    Examples:
        >>> from io import StringIO
        >>> from json import loads

        >>> s = StringIO()
        >>> base = logging.getLogger('pcross.findings.doctest')
        >>> base.addHandler(logging.StreamHandler(s))
        >>> base.setLevel(logging.INFO)
        >>> structured = StructuredAdapter(base, {'suite': 'artinian'})
        >>> structured.info('finding', extra={'ratio': Fraction(2, 4)})
        >>> loads(s.getvalue()) == {
        ...     'suite': 'artinian', 'message': 'finding', 'ratio': '1/2'}
        True
    """

    def process(self, msg, kwargs):
        _, kwargs = super().process(msg, kwargs)
        return str(StructuredMessage(msg, **kwargs["extra"])), kwargs
