# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
pcross.formatters
~~~~~~~~~~~~~~~~~

Log formatters for lab findings

Examples:
    Add a summary formatter::

        >>> import sys

        >>> logger = logging.getLogger('summary_logger')
        >>> hdlr = logging.StreamHandler(sys.stdout)
        >>> hdlr.setFormatter(summary_formatter)
        >>> logger.addHandler(hdlr)
        >>> logger.propagate = False
        >>> findings = [
        ...     {'suite': 'artinian', 'verdict': 'confirmed', 'trial': 0},
        ...     {'suite': 'artinian', 'verdict': 'degenerate', 'trial': 1}]
        >>> logger.warning('done', extra={'findings': findings})
        artinian: 2 findings (confirmed 1, degenerate 1)
        total: 2 findings, 0 refuted

Attributes:
    BASIC_FORMAT (str): A basic format

    VERDICTS (tuple): The verdicts a finding may carry, in report order
"""

import logging

BASIC_FORMAT = "%(message)s"
VERDICTS = ("confirmed", "expected", "degenerate", "refuted")


def _as_dict(finding):
    return finding.to_dict() if hasattr(finding, "to_dict") else finding


class BaseFormatter(logging.Formatter):
    """A logging formatter that can tell the `extra` fields of a record

    Args:
        fmt (string): Log message format.

        datefmt (string): Log date format.

    Examples:
        >>> BaseFormatter("%(message)s")  # doctest: +ELLIPSIS
        <pcross.formatters.BaseFormatter object at 0x...>
    """

    def __init__(self, fmt=None, datefmt=None):
        empty_record = logging.makeLogRecord({})
        filterer = lambda k: k not in empty_record.__dict__ and k != "asctime"
        self.filterer = filterer
        super().__init__(fmt=fmt, datefmt=datefmt)

    def extra(self, record):
        """The fields passed through `extra`"""
        keys = filter(self.filterer, record.__dict__)
        return {k: record.__dict__[k] for k in keys}


class SummaryFormatter(BaseFormatter):
    """Renders a record carrying a `findings` extra as a per suite summary.
    Records without findings are formatted as usual.
    """

    def summarize(self, findings):
        """Summary lines for a list of findings

        Args:
            findings (List[Finding or dict]): The findings.

        Returns:
            List[str]: One line per suite, one per refutation and a total

        Examples:
            >>> formatter = SummaryFormatter()
            >>> findings = [{
            ...     'suite': 'semisimple', 'verdict': 'refuted', 'trial': 3,
            ...     'claim': 'R semisimple iff R*G semisimple'}]
            >>> for line in formatter.summarize(findings):
            ...     print(line)
            semisimple: 1 findings (refuted 1)
              refuted in trial 3: R semisimple iff R*G semisimple
            total: 1 findings, 1 refuted
        """
        findings = [_as_dict(f) for f in findings]
        suites, lines = [], []

        for finding in findings:
            if finding["suite"] not in suites:
                suites.append(finding["suite"])

        for suite in suites:
            mine = [f for f in findings if f["suite"] == suite]
            counts = [(v, sum(f["verdict"] == v for f in mine)) for v in VERDICTS]
            tally = ", ".join("%s %i" % (v, n) for v, n in counts if n)
            lines.append("%s: %i findings (%s)" % (suite, len(mine), tally))

            for f in mine:
                if f["verdict"] == "refuted":
                    args = (f.get("trial"), f.get("claim", ""))
                    lines.append("  refuted in trial %s: %s" % args)

        refuted = sum(f["verdict"] == "refuted" for f in findings)
        lines.append("total: %i findings, %i refuted" % (len(findings), refuted))
        return lines

    def format(self, record):
        extra = self.extra(record)

        if "findings" in extra:
            return "\n".join(self.summarize(extra["findings"]))
        else:
            return super().format(record)


summary_formatter = SummaryFormatter(BASIC_FORMAT)
